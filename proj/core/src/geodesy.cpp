#include "geodetic/geodesy.hpp"

#include <algorithm>

namespace geodetic {

DistanceMatrix::Distance DistanceMatrix::diameter() const noexcept {
  Distance best = 0;
  for (Distance d : d_) best = std::max(best, d);
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix dist(n);
  for (Vertex i = 0; i < n; ++i) {
    dist.at(i, i) = 0;
    for (Vertex j : g.neighbors(i)) dist.at(i, j) = 1;
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      const auto dik = dist(i, k);
      if (dik == DistanceMatrix::kUnreachable) continue;
      for (Vertex j = 0; j < n; ++j) {
        const auto through = dik + dist(k, j);
        if (through < dist(i, j)) dist.at(i, j) = through;
      }
    }
  }
  return dist;
}

IntervalTable::IntervalTable(std::size_t n) : n_(n) {
  sets_.assign(n * (n + 1) / 2, VertexSet(n));
}

IntervalTable interval_table(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  IntervalTable table(n);
  for (Vertex i = 0; i < n; ++i) {
    const auto row_i = dist.row(i);
    for (Vertex j = i; j < n; ++j) {
      const auto row_j = dist.row(j);
      const auto dij = row_i[j];
      VertexSet& set = table.at(i, j);
      for (Vertex k = 0; k < n; ++k) {
        if (row_i[k] + row_j[k] == dij) set.insert(k);
      }
    }
  }
  return table;
}

VertexSet closure(const IntervalTable& table, const VertexSet& s) {
  VertexSet out(table.size());
  const auto members = s.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a; b < members.size(); ++b) {
      out |= table(members[a], members[b]);
    }
  }
  return out;
}

bool is_geodetic(const IntervalTable& table, const VertexSet& s) {
  return closure(table, s).size() == table.size();
}

PkTable pk_table(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  std::vector<std::vector<PkTable::Pair>> pairs(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const auto dij = dist(i, j);
      for (Vertex k = 0; k < n; ++k) {
        if (dist(i, k) + dist(k, j) == dij) pairs[k].emplace_back(i, j);
      }
    }
  }
  return PkTable(std::move(pairs));
}

std::vector<VertexSet> sssp_intervals(const Graph& g, Vertex v) {
  const std::size_t n = g.num_vertices();
  constexpr auto kUnseen = DistanceMatrix::kUnreachable;
  std::vector<DistanceMatrix::Distance> depth(n, kUnseen);
  std::vector<Vertex> order;
  order.reserve(n);
  depth[v] = 0;
  order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : g.neighbors(u)) {
      if (depth[w] == kUnseen) {
        depth[w] = depth[u] + 1;
        order.push_back(w);
      }
    }
  }

  // Ancestors are collected in BFS order: every DAG predecessor p of u (a
  // neighbor one level closer to v) is finished before u, so the backward
  // closure of u is u plus the union of its predecessors' closures.
  std::vector<VertexSet> row(n, VertexSet(n));
  for (const Vertex u : order) {
    VertexSet& set = row[u];
    set.insert(u);
    for (Vertex p : g.neighbors(u)) {
      if (depth[p] + 1 == depth[u]) set |= row[p];
    }
  }
  return row;
}

}  // namespace geodetic
