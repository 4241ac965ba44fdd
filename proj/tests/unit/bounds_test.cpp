#include "doctest.h"
#include "fixtures.hpp"
#include "geodetic/bounds.hpp"
#include "oracles.hpp"

using namespace geodetic;
using namespace geodetic::testing;

TEST_CASE("trivial bound") {
  CHECK(trivial_bound(complete_graph(5)) == 5);
  CHECK(oracle_geodetic_number(complete_graph(5)) == 5);
  CHECK(trivial_bound(path_graph(4)) == 4);
  CHECK(trivial_bound(Graph::from_edges(1, {})) == 1);
}

TEST_CASE("diameter bound") {
  CHECK(diameter_bound(all_pairs_distances(path_graph(4))) == 2);
  CHECK(oracle_geodetic_number(path_graph(4)) == 2);
  for (std::size_t n = 2; n <= 7; ++n) {
    CHECK(diameter_bound(all_pairs_distances(complete_graph(n))) == n);
  }
  CHECK(diameter_bound(all_pairs_distances(cycle_graph(6))) == 4);
  CHECK(oracle_geodetic_number(cycle_graph(6)) == 2);
}

TEST_CASE("geodetic number <= diameter bound <= trivial bound") {
  for (auto family : {Family::ER, Family::WS, Family::BA}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_graph(family, 6 + seed % 7, 0.3, seed);
      const auto db = diameter_bound(all_pairs_distances(g));
      CHECK(oracle_geodetic_number(g) <= db);
      CHECK(db <= trivial_bound(g));
    }
  }
}
