#pragma once

#include <cstddef>
#include <vector>

#include "geodetic/generators.hpp"
#include "geodetic/graph.hpp"

namespace geodetic::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

/// K_{1,k} with center 0 and leaves 1..k.
inline Graph star_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= k; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(k + 1, edges);
}

/// Seeded connected graph with roughly the given density, at least a tree.
inline Graph random_graph(Family family, std::size_t n, double density,
                          std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.n = n;
  spec.m_target = std::max(n - 1, edges_for_density(n, density));
  spec.seed = seed;
  return generate(spec);
}

}  // namespace geodetic::testing
