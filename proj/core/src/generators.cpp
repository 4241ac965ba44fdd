#include "geodetic/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "geodetic/errors.hpp"
#include "geodetic/rng.hpp"

namespace geodetic {
namespace {

std::uint64_t sub_seed(std::uint64_t seed, int attempt) {
  SplitMix64 sm(seed ^ (static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL));
  return sm.next();
}

// Dense adjacency used while drawing; n stays in the low thousands.
class EdgeMatrix {
 public:
  explicit EdgeMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  bool has(Vertex u, Vertex v) const { return bits_[u * n_ + v] != 0; }
  bool add(Vertex u, Vertex v) {
    if (u == v || has(u, v)) return false;
    bits_[u * n_ + v] = bits_[v * n_ + u] = 1;
    ++count_;
    return true;
  }
  void remove(Vertex u, Vertex v) {
    if (!has(u, v)) return;
    bits_[u * n_ + v] = bits_[v * n_ + u] = 0;
    --count_;
  }
  std::size_t count() const { return count_; }
  std::size_t size() const { return n_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (has(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!has(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::size_t count_ = 0;
  std::vector<char> bits_;
};

// Moves k uniformly chosen elements to the front (partial Fisher-Yates).
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t k, Xoshiro256& rng) {
  for (std::size_t i = 0; i < k && i < items.size(); ++i) {
    const std::size_t j = i + rng.below(items.size() - i);
    std::swap(items[i], items[j]);
  }
}

void top_up(EdgeMatrix& adj, std::size_t m_target, Xoshiro256& rng) {
  if (adj.count() >= m_target) return;
  auto candidates = adj.non_edges();
  const std::size_t needed = m_target - adj.count();
  partial_shuffle(candidates, needed, rng);
  for (std::size_t i = 0; i < needed; ++i) {
    adj.add(candidates[i].first, candidates[i].second);
  }
}

EdgeMatrix draw_er(const GenSpec& spec, Xoshiro256& rng) {
  EdgeMatrix adj(spec.n);
  top_up(adj, spec.m_target, rng);
  return adj;
}

EdgeMatrix draw_ws(const GenSpec& spec, Xoshiro256& rng) {
  const std::size_t n = spec.n;
  const std::size_t half = spec.m_target / n;
  EdgeMatrix adj(n);
  for (std::size_t j = 1; j <= half; ++j) {
    for (Vertex i = 0; i < n; ++i) {
      adj.add(i, static_cast<Vertex>((i + j) % n));
    }
  }
  // Rewire lattice edges lap by lap, as in the original construction.
  for (std::size_t j = 1; j <= half; ++j) {
    for (Vertex i = 0; i < n; ++i) {
      const auto target = static_cast<Vertex>((i + j) % n);
      if (!adj.has(i, target) || !rng.bernoulli(spec.ws_rewire_prob)) continue;
      std::vector<Vertex> free;
      for (Vertex r = 0; r < n; ++r) {
        if (r != i && !adj.has(i, r)) free.push_back(r);
      }
      if (free.empty()) continue;
      const Vertex r = free[rng.below(free.size())];
      adj.remove(i, target);
      adj.add(i, r);
    }
  }
  top_up(adj, spec.m_target, rng);
  return adj;
}

EdgeMatrix draw_ba(const GenSpec& spec, Xoshiro256& rng) {
  const std::size_t n = spec.n;
  const std::size_t d = std::max<std::size_t>(1, spec.m_target / n);
  EdgeMatrix adj(n);
  std::vector<Vertex> endpoints;  // each vertex repeated once per incident edge
  for (Vertex u = 0; u <= d; ++u) {
    for (Vertex v = u + 1; v <= d; ++v) {
      adj.add(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Vertex> targets;
  for (auto v = static_cast<Vertex>(d + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < d) {
      const Vertex t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (Vertex t : targets) {
      adj.add(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  top_up(adj, spec.m_target, rng);
  return adj;
}

std::string describe(const GenSpec& spec) {
  return std::string(to_string(spec.family)) + "(n=" + std::to_string(spec.n) +
         ", m=" + std::to_string(spec.m_target) +
         ", seed=" + std::to_string(spec.seed) + ")";
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::ER: return "ER";
    case Family::WS: return "WS";
    case Family::BA: return "BA";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "er") return Family::ER;
  if (lower == "ws") return Family::WS;
  if (lower == "ba") return Family::BA;
  return std::nullopt;
}

void validate(const GenSpec& spec) {
  const std::size_t max_edges = spec.n * (spec.n - (spec.n > 0 ? 1 : 0)) / 2;
  if (spec.m_target == 0 || spec.m_target > max_edges) {
    throw ValidationError(describe(spec) + ": edge count must be in [1, " +
                          std::to_string(max_edges) + "]");
  }
  if (spec.m_target + 1 < spec.n) {
    throw ValidationError(describe(spec) +
                          ": fewer than n-1 edges cannot be connected");
  }
  if (!(spec.ws_rewire_prob >= 0.0 && spec.ws_rewire_prob <= 1.0)) {
    throw ValidationError(describe(spec) + ": rewiring probability outside [0, 1]");
  }
}

Graph generate(const GenSpec& spec) {
  validate(spec);
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    Xoshiro256 rng(sub_seed(spec.seed, attempt));
    EdgeMatrix adj = [&] {
      switch (spec.family) {
        case Family::ER: return draw_er(spec, rng);
        case Family::WS: return draw_ws(spec, rng);
        case Family::BA: return draw_ba(spec, rng);
      }
      return EdgeMatrix(0);
    }();
    if (adj.count() != spec.m_target) continue;
    const auto edges = adj.edges();
    Graph g = Graph::from_edges(spec.n, edges);
    if (is_connected(g)) return g;
  }
  throw GenerationError(describe(spec) + ": no connected draw after " +
                        std::to_string(kGenerationRetries) + " attempts");
}

std::size_t edges_for_percent(std::size_t n, unsigned percent) noexcept {
  const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
  return max_edges * percent / 100;
}

std::size_t edges_for_density(std::size_t n, double density) noexcept {
  const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
  return static_cast<std::size_t>(
      std::floor(density * static_cast<double>(max_edges) + 1e-9));
}

std::vector<std::size_t> grid_sizes(GridScheme scheme) {
  if (scheme == GridScheme::Large) return {115, 135, 150};
  return {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
}

std::vector<unsigned> grid_percents(GridScheme scheme) {
  if (scheme == GridScheme::Large) return {25, 50, 75};
  return {20, 40, 60, 80};
}

std::vector<GenSpec> benchmark_grid(GridScheme scheme, Family family,
                                    std::uint64_t seed_base) {
  std::vector<GenSpec> cells;
  for (std::size_t n : grid_sizes(scheme)) {
    for (unsigned pct : grid_percents(scheme)) {
      GenSpec spec;
      spec.family = family;
      spec.n = n;
      spec.m_target = edges_for_percent(n, pct);
      spec.seed = seed_base + cells.size();
      cells.push_back(spec);
    }
  }
  return cells;
}

}  // namespace geodetic
