#pragma once

#include <map>
#include <optional>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/result.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

/// State of the single-source greedy. Only rows I_{s,.} for members s that
/// have been expanded are ever materialized; gains[j] accumulates the union
/// of I_{s,j} over those rows for j outside S.
struct LocalState {
  VertexSet members;
  VertexSet coverage;
  VertexSet remaining;
  std::map<Vertex, std::vector<VertexSet>> rows;
  std::vector<VertexSet> gains;
};

struct LocalChoice {
  Vertex vertex = 0;
  VertexSet gain;
};

/// Smallest degree-one vertex, else smallest simplicial vertex, else the
/// smallest vertex of minimum degree.
Vertex find_start(const Graph& g);

/// S = {seed}, nothing covered yet.
LocalState make_local_state(std::size_t n, Vertex seed);

/// Expands member w with one BFS pass, folds its row into the accumulated
/// gains and returns argmax over j outside S of |gains[j] \ coverage|
/// (smallest index on ties) with the unreduced gains[u]. Returns nullopt
/// when every vertex is already in S.
std::optional<LocalChoice> largest_local_increase(const Graph& g, Vertex w,
                                                  LocalState& state);

GeodeticResult locally_greedy_geodetic(const Graph& g);

/// The loop alone, from an explicit seed. Returns the final state.
LocalState locally_greedy_run(const Graph& g, Vertex seed);

}  // namespace geodetic
