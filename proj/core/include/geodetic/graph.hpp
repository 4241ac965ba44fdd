#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "geodetic/vertex_set.hpp"

namespace geodetic {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; connectivity is checked separately so that
/// disconnected inputs can still be represented and reported.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse to one. Throws ValidationError on self-loops or
  /// out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// True iff a traversal from vertex 0 reaches every vertex. The empty and
/// single-vertex graphs count as connected.
bool is_connected(const Graph& g);

/// Throws ValidationError unless g is connected and non-empty.
void require_connected(const Graph& g);

/// True iff the neighbors of v are pairwise adjacent. Vertices of degree
/// 0 or 1 are simplicial.
bool is_simplicial(const Graph& g, Vertex v);

}  // namespace geodetic
