#pragma once

#include <cstddef>
#include <string_view>

#include "geodetic/vertex_set.hpp"

namespace geodetic {

enum class Algorithm { Exact, BruteForce, Greedy, GreedyAddOne, LocallyGreedy };

std::string_view to_string(Algorithm algorithm) noexcept;

struct GeodeticResult {
  Algorithm algorithm = Algorithm::Exact;
  VertexSet set;
  /// |set|; an upper bound on the geodetic number, exact when optimal.
  std::size_t value = 0;
  bool optimal = false;
  /// set was checked against the pristine interval table.
  bool verified = false;
  double elapsed_seconds = 0.0;
};

}  // namespace geodetic
