#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

/// Hop distances between all vertex pairs.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  /// Entry value for unreachable pairs. Small enough that the sum of two
  /// entries does not overflow.
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max() / 4;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  Distance operator()(Vertex i, Vertex j) const noexcept { return d_[i * n_ + j]; }
  Distance& at(Vertex i, Vertex j) noexcept { return d_[i * n_ + j]; }
  std::span<const Distance> row(Vertex i) const noexcept {
    return {d_.data() + i * n_, n_};
  }

  /// Largest entry; 0 for graphs with fewer than two vertices.
  Distance diameter() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

/// Floyd-Warshall on unit edge lengths. g must be connected for all entries
/// to be finite.
DistanceMatrix all_pairs_distances(const Graph& g);

/// I_ij for every unordered pair i <= j, stored in a triangular layout. The
/// pristine table holds k in I_ij iff d(i,k) + d(k,j) = d(i,j); the greedy
/// solver mutates a copy into its residual form.
class IntervalTable {
 public:
  IntervalTable() = default;
  explicit IntervalTable(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  const VertexSet& operator()(Vertex i, Vertex j) const noexcept {
    return sets_[index(i, j)];
  }
  VertexSet& at(Vertex i, Vertex j) noexcept { return sets_[index(i, j)]; }

  /// Every stored set, in (i, j) i <= j lexicographic order.
  std::span<VertexSet> all() noexcept { return sets_; }
  std::span<const VertexSet> all() const noexcept { return sets_; }

 private:
  std::size_t index(Vertex i, Vertex j) const noexcept {
    if (i > j) std::swap(i, j);
    // Row i of the upper triangle starts after i rows of shrinking length.
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
           (j - i);
  }

  std::size_t n_ = 0;
  std::vector<VertexSet> sets_;
};

IntervalTable interval_table(const DistanceMatrix& dist);

/// Geodetic closure I[S]: the union of I_ij over all i, j in S (i = j
/// included). Expects a pristine table.
VertexSet closure(const IntervalTable& table, const VertexSet& s);

/// True iff closure(table, s) is the whole vertex set.
bool is_geodetic(const IntervalTable& table, const VertexSet& s);

/// For every vertex k, the pairs (i, j), i < j, with d(i,k) + d(k,j) = d(i,j).
/// Pairs with k as an endpoint are included.
class PkTable {
 public:
  using Pair = std::pair<Vertex, Vertex>;

  PkTable() = default;
  explicit PkTable(std::vector<std::vector<Pair>> pairs) : pairs_(std::move(pairs)) {}

  std::size_t size() const noexcept { return pairs_.size(); }
  std::span<const Pair> pairs_through(Vertex k) const noexcept { return pairs_[k]; }

 private:
  std::vector<std::vector<Pair>> pairs_;
};

PkTable pk_table(const DistanceMatrix& dist);

/// Row I_{v,j} for every j, computed from one BFS pass out of v without any
/// all-pairs data: the predecessor DAG of the pass is walked backwards so
/// that I_{v,j} is j together with all of its DAG ancestors.
std::vector<VertexSet> sssp_intervals(const Graph& g, Vertex v);

}  // namespace geodetic
