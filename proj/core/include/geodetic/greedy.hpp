#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geodetic/geodesy.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/result.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

/// Working state of the all-pairs greedy solver.
///
/// At every loop head `coverage` equals closure(pristine, members) and every
/// residual set equals its pristine counterpart minus `coverage`. Entry i of
/// `single_gains` holds I_i[S], the union of residual I_ij over j in S, for
/// i outside S; it is refreshed by largest_increase.
struct GreedyState {
  VertexSet members;
  VertexSet coverage;
  IntervalTable residual;
  std::vector<VertexSet> single_gains;
};

struct SingleChoice {
  std::optional<Vertex> vertex;
  VertexSet gain;
};

struct PairChoice {
  std::optional<std::pair<Vertex, Vertex>> pair;
  VertexSet gain;
};

/// Seeds S with every vertex of degree <= 1 and strips the covered vertices
/// from a copy of the pristine table.
GreedyState greedy_init(const Graph& g, const IntervalTable& pristine);

/// Refreshes state.single_gains and returns the outside vertex with the
/// largest gain (smallest index on ties). No vertex is returned when the
/// best gain is empty, which includes S = {} and S = V.
SingleChoice largest_increase(GreedyState& state);

/// Best pair i < j outside S by |residual I_ij ∪ I_i[S] ∪ I_j[S]|, ties to
/// the lexicographically smallest pair. Uses the single gains left by the
/// last largest_increase call. No pair when fewer than two vertices remain
/// outside S or the best gain is empty.
PairChoice largest_increase_pair(const GreedyState& state);

/// Adds `added` to S, merges `gain` into the coverage and strips the newly
/// covered vertices from the residual table.
void commit(GreedyState& state, std::span<const Vertex> added, const VertexSet& gain);

/// Full greedy run: Floyd distances, interval table, initialization and the
/// one-versus-pair loop. With add_one the pair search only runs before the
/// loop; inside it a single vertex is added per step. The returned set is
/// verified geodetic.
GeodeticResult greedy_geodetic(const Graph& g, bool add_one);

/// Same loop on precomputed pristine intervals (no timing of setup).
VertexSet greedy_geodetic_set(const Graph& g, const IntervalTable& pristine,
                              bool add_one);

}  // namespace geodetic
