#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "geodetic/graph.hpp"
#include "geodetic/result.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

struct SearchLimits {
  std::optional<double> time_budget_seconds;
  /// Maximum number of subset evaluations.
  std::optional<std::uint64_t> node_budget;
};

/// Throws ValidationError on a non-positive budget.
void validate(const SearchLimits& limits);

inline constexpr std::size_t kBruteForceMaxVertices = 25;

/// Degree-one and simplicial vertices. They belong to every geodetic set.
VertexSet forced_vertices(const Graph& g);

/// Evaluates g(G) = min{|S| : I[S] = V} by enumerating subsets by increasing
/// size, lexicographically within a size. Refuses (LimitError) above
/// kBruteForceMaxVertices vertices.
GeodeticResult brute_force_geodetic(const Graph& g);

/// Branch-and-bound over supersets of the forced vertices, by increasing
/// size, starting from the greedy set as incumbent. A partial choice is cut
/// when even the most optimistic coverage gain of its remaining slots cannot
/// reach n. If a budget runs out the incumbent is returned with
/// optimal = false.
GeodeticResult exact_geodetic(const Graph& g, const SearchLimits& limits = {});

}  // namespace geodetic
