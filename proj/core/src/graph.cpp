#include "geodetic/graph.hpp"

#include <algorithm>
#include <string>

#include "geodetic/errors.hpp"

namespace geodetic {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range for n=" +
                            std::to_string(n));
    }
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

void require_connected(const Graph& g) {
  if (g.num_vertices() == 0) throw ValidationError("graph has no vertices");
  if (!is_connected(g)) throw ValidationError("graph is not connected");
}

bool is_simplicial(const Graph& g, Vertex v) {
  const auto nbrs = g.neighbors(v);
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (!g.has_edge(nbrs[a], nbrs[b])) return false;
    }
  }
  return true;
}

}  // namespace geodetic
