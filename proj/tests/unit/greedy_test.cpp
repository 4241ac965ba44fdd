#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/greedy.hpp"
#include "oracles.hpp"

using namespace geodetic;
using namespace geodetic::testing;

namespace {

std::set<Vertex> as_set(const VertexSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

IntervalTable table_of(const Graph& g) { return interval_table(all_pairs_distances(g)); }

void check_state_invariants(const GreedyState& state, const IntervalTable& pristine) {
  CHECK(state.coverage == closure(pristine, state.members));
  const std::size_t n = pristine.size();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i; j < n; ++j) {
      CHECK(state.residual(i, j) == pristine(i, j) - state.coverage);
    }
  }
  if (!state.members.empty()) CHECK(state.members.is_subset_of(state.coverage));
}

}  // namespace

TEST_CASE("greedy_init") {
  SUBCASE("P_4 starts geodetic") {
    const Graph g = path_graph(4);
    const auto pristine = table_of(g);
    const auto state = greedy_init(g, pristine);
    CHECK(as_set(state.members) == std::set<Vertex>{0, 3});
    CHECK(state.coverage.size() == 4);
    for (const auto& set : state.residual.all()) CHECK(set.empty());
  }
  SUBCASE("K_3 has no low-degree vertex") {
    const Graph g = complete_graph(3);
    const auto pristine = table_of(g);
    const auto state = greedy_init(g, pristine);
    CHECK(state.members.empty());
    CHECK(state.coverage.empty());
    for (Vertex i = 0; i < 3; ++i) {
      for (Vertex j = i; j < 3; ++j) CHECK(state.residual(i, j) == pristine(i, j));
    }
  }
  SUBCASE("star leaves cover the center") {
    const Graph g = star_graph(4);
    const auto pristine = table_of(g);
    const auto state = greedy_init(g, pristine);
    CHECK(as_set(state.members) == std::set<Vertex>{1, 2, 3, 4});
    CHECK(oracle_closure(g, {1, 2, 3, 4}).size() == 5);
    CHECK(state.coverage.size() == 5);
    check_state_invariants(state, pristine);
  }
}

TEST_CASE("largest_increase") {
  SUBCASE("K_3 with S = {0, 1}") {
    const Graph g = complete_graph(3);
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    const Vertex added[] = {0, 1};
    commit(state, added, pristine(0, 1));
    check_state_invariants(state, pristine);
    CHECK(as_set(state.residual(0, 2)) == std::set<Vertex>{2});
    CHECK(as_set(state.residual(1, 2)) == std::set<Vertex>{2});
    const auto choice = largest_increase(state);
    REQUIRE(choice.vertex.has_value());
    CHECK(*choice.vertex == 2);
    CHECK(as_set(choice.gain) == std::set<Vertex>{2});
  }
  SUBCASE("empty S gives nothing") {
    const Graph g = cycle_graph(5);
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    const auto choice = largest_increase(state);
    CHECK_FALSE(choice.vertex.has_value());
    CHECK(choice.gain.empty());
  }
  SUBCASE("P_4 after init has zero gain everywhere") {
    const Graph g = path_graph(4);
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    const auto choice = largest_increase(state);
    CHECK_FALSE(choice.vertex.has_value());
    CHECK(choice.gain.size() == 0);
  }
}

TEST_CASE("largest_increase_pair") {
  SUBCASE("K_3 with S empty") {
    const Graph g = complete_graph(3);
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    (void)largest_increase(state);
    const auto choice = largest_increase_pair(state);
    REQUIRE(choice.pair.has_value());
    CHECK(*choice.pair == std::pair<Vertex, Vertex>{0, 1});
    CHECK(as_set(choice.gain) == std::set<Vertex>{0, 1});
  }
  SUBCASE("C_5 with S empty prefers distance-two pairs") {
    const Graph g = cycle_graph(5);
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    (void)largest_increase(state);
    const auto choice = largest_increase_pair(state);
    REQUIRE(choice.pair.has_value());
    CHECK(*choice.pair == std::pair<Vertex, Vertex>{0, 2});
    CHECK(as_set(choice.gain) == std::set<Vertex>{0, 1, 2});
  }
  SUBCASE("single outside vertex has no pair") {
    const Graph g = complete_graph(3);
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    const Vertex added[] = {0, 1};
    commit(state, added, pristine(0, 1));
    (void)largest_increase(state);
    const auto choice = largest_increase_pair(state);
    CHECK_FALSE(choice.pair.has_value());
    CHECK(choice.gain.empty());
  }
}

TEST_CASE("greedy_geodetic examples") {
  for (bool add_one : {false, true}) {
    CAPTURE(add_one);
    CHECK(greedy_geodetic(path_graph(4), add_one).value == 2);
    for (std::size_t n = 2; n <= 7; ++n) CHECK(greedy_geodetic(complete_graph(n), add_one).value == n);
    CHECK(greedy_geodetic(Graph::from_edges(1, {}), add_one).value == 1);
  }
  const auto c5 = greedy_geodetic(cycle_graph(5), false);
  CHECK(as_set(c5.set) == std::set<Vertex>{0, 2, 3});
  CHECK(c5.verified);
  CHECK_FALSE(c5.optimal);
  CHECK(c5.algorithm == Algorithm::Greedy);
  CHECK(greedy_geodetic(cycle_graph(5), true).algorithm == Algorithm::GreedyAddOne);
}

TEST_CASE("greedy gains equal closure increments") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(Family::ER, 6 + seed % 6, 0.35, seed);
    const std::size_t n = g.num_vertices();
    const auto pristine = table_of(g);
    auto state = greedy_init(g, pristine);
    // Walk the loop by hand, checking every single and pair gain.
    for (int step = 0; step < static_cast<int>(n); ++step) {
      check_state_invariants(state, pristine);
      const auto single = largest_increase(state);
      const auto base = closure(pristine, state.members);
      for (Vertex i = 0; i < n; ++i) {
        if (state.members.contains(i) || state.members.empty()) continue;
        VertexSet with = state.members;
        with.insert(i);
        CHECK(state.single_gains[i] == closure(pristine, with) - base);
      }
      const auto pair = largest_increase_pair(state);
      if (pair.pair) {
        VertexSet with = state.members;
        with.insert(pair.pair->first);
        with.insert(pair.pair->second);
        CHECK(pair.gain == closure(pristine, with) - base);
      }
      if (single.gain.size() + pair.gain.size() == 0) break;
      if (2 * single.gain.size() > pair.gain.size()) {
        const Vertex added[] = {*single.vertex};
        commit(state, added, single.gain);
      } else {
        const Vertex added[] = {pair.pair->first, pair.pair->second};
        commit(state, added, pair.gain);
      }
    }
    CHECK(state.coverage.size() == n);
  }
}

TEST_CASE("greedy output is geodetic, bounded below by g(G), deterministic") {
  for (auto family : {Family::ER, Family::WS, Family::BA}) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const Graph g = random_graph(family, 5 + seed, 0.2 + 0.05 * static_cast<double>(seed % 8), seed);
      const auto pristine = table_of(g);
      const std::size_t optimum = oracle_geodetic_number(g);
      for (bool add_one : {false, true}) {
        const auto result = greedy_geodetic(g, add_one);
        CHECK(is_geodetic(pristine, result.set));
        CHECK(result.value == result.set.size());
        CHECK(result.value >= optimum);
        CHECK(result.value <= g.num_vertices());
        CHECK(greedy_geodetic(g, add_one).set == result.set);
      }
    }
  }
}
