#include "geodetic/exact.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "geodetic/errors.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/greedy.hpp"

namespace geodetic {
namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExpired {};

class SubsetSearch {
 public:
  SubsetSearch(const IntervalTable& table, const VertexSet& forced,
               const SearchLimits& limits, Clock::time_point start)
      : table_(table), n_(table.size()), limits_(limits), start_(start) {
    for (Vertex v = 0; v < n_; ++v) {
      if (forced.contains(v)) {
        base_.push_back(v);
      } else {
        pool_.push_back(v);
      }
    }
  }

  /// Looks for a geodetic set with exactly `extra` vertices beyond the
  /// forced ones. Throws BudgetExpired.
  std::optional<VertexSet> find(std::size_t extra) {
    chosen_ = base_;
    VertexSet cover = closure(table_, VertexSet::from_members(n_, base_));
    if (dfs(0, extra, cover)) {
      return VertexSet::from_members(n_, chosen_);
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t next, std::size_t slots, const VertexSet& cover) {
    tick();
    if (slots == 0) return cover.size() == n_;
    if (pool_.size() - next < slots) return false;
    if (cover.size() + gain_bound(next, slots, cover) < n_) return false;

    for (std::size_t idx = next; idx + slots <= pool_.size(); ++idx) {
      const Vertex a = pool_[idx];
      VertexSet extended = cover;
      extended |= table_(a, a);
      for (Vertex x : chosen_) extended |= table_(a, x);
      chosen_.push_back(a);
      if (dfs(idx + 1, slots - 1, extended)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // Largest number of new vertices that `slots` more picks from
  // pool_[next..] can cover. Adding a set A to the chosen set X covers
  //   (union over a in A of I_ax, x in X ∪ {a})  ∪  (union over a<a' in A of I_aa')
  // so the |A| largest single gains plus the C(|A|, 2) largest pair gains
  // bound it from above.
  std::size_t gain_bound(std::size_t next, std::size_t slots, const VertexSet& cover) {
    singles_.clear();
    for (std::size_t idx = next; idx < pool_.size(); ++idx) {
      const Vertex a = pool_[idx];
      scratch_ = table_(a, a);
      for (Vertex x : chosen_) scratch_ |= table_(a, x);
      singles_.push_back(scratch_.count_minus(cover));
    }
    std::size_t bound = top_sum(singles_, slots);
    const std::size_t pair_slots = slots * (slots - 1) / 2;
    if (pair_slots > 0) {
      pairs_.clear();
      for (std::size_t p = next; p < pool_.size(); ++p) {
        for (std::size_t q = p + 1; q < pool_.size(); ++q) {
          pairs_.push_back(table_(pool_[p], pool_[q]).count_minus(cover));
        }
      }
      bound += top_sum(pairs_, pair_slots);
    }
    return bound;
  }

  static std::size_t top_sum(std::vector<std::size_t>& values, std::size_t k) {
    k = std::min(k, values.size());
    std::partial_sort(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k),
                      values.end(), std::greater<>());
    std::size_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += values[i];
    return sum;
  }

  void tick() {
    ++nodes_;
    if (limits_.node_budget && nodes_ > *limits_.node_budget) throw BudgetExpired{};
    if (limits_.time_budget_seconds && (nodes_ & 0xff) == 0) {
      const std::chrono::duration<double> spent = Clock::now() - start_;
      if (spent.count() > *limits_.time_budget_seconds) throw BudgetExpired{};
    }
  }

  const IntervalTable& table_;
  std::size_t n_;
  SearchLimits limits_;
  Clock::time_point start_;
  std::vector<Vertex> base_;
  std::vector<Vertex> pool_;
  std::vector<Vertex> chosen_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> singles_;
  std::vector<std::size_t> pairs_;
  VertexSet scratch_;
};

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void validate(const SearchLimits& limits) {
  if (limits.time_budget_seconds && !(*limits.time_budget_seconds > 0.0)) {
    throw ValidationError("time budget must be positive");
  }
  if (limits.node_budget && *limits.node_budget == 0) {
    throw ValidationError("node budget must be positive");
  }
}

VertexSet forced_vertices(const Graph& g) {
  VertexSet forced(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) <= 1 || is_simplicial(g, v)) forced.insert(v);
  }
  return forced;
}

GeodeticResult brute_force_geodetic(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw LimitError("brute force refuses n=" + std::to_string(n) + " (limit " +
                     std::to_string(kBruteForceMaxVertices) + ")");
  }
  const auto start = Clock::now();
  const IntervalTable table = interval_table(all_pairs_distances(g));

  GeodeticResult result;
  result.algorithm = Algorithm::BruteForce;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      VertexSet s(n);
      for (std::size_t i : idx) s.insert(static_cast<Vertex>(i));
      if (is_geodetic(table, s)) {
        result.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        result.value = k;
        result.set = std::move(s);
        result.optimal = true;
        result.verified = true;
        return result;
      }
    } while (next_combination(idx, n));
  }
  throw AlgorithmError("no geodetic subset found, not even V");
}

GeodeticResult exact_geodetic(const Graph& g, const SearchLimits& limits) {
  require_connected(g);
  validate(limits);
  const auto start = Clock::now();
  const IntervalTable table = interval_table(all_pairs_distances(g));
  const VertexSet forced = forced_vertices(g);

  GeodeticResult result;
  result.algorithm = Algorithm::Exact;
  result.set = greedy_geodetic_set(g, table, /*add_one=*/false);
  result.optimal = true;

  if (result.set.size() > forced.size()) {
    SubsetSearch search(table, forced, limits, start);
    try {
      for (std::size_t extra = 0; forced.size() + extra < result.set.size(); ++extra) {
        if (auto found = search.find(extra)) {
          result.set = std::move(*found);
          break;
        }
      }
    } catch (const BudgetExpired&) {
      result.optimal = false;
    }
  }
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  if (!is_geodetic(table, result.set)) {
    throw AlgorithmError("exact search returned a non-geodetic set");
  }
  result.value = result.set.size();
  result.verified = true;
  return result;
}

}  // namespace geodetic
