#include "geodetic/greedy.hpp"

#include <chrono>
#include <string>

#include "geodetic/errors.hpp"

namespace geodetic {

GreedyState greedy_init(const Graph& g, const IntervalTable& pristine) {
  const std::size_t n = g.num_vertices();
  GreedyState state{VertexSet(n), VertexSet(n), pristine,
                    std::vector<VertexSet>(n, VertexSet(n))};
  for (Vertex k = 0; k < n; ++k) {
    if (g.degree(k) <= 1) state.members.insert(k);
  }
  state.coverage = closure(pristine, state.members);
  if (!state.coverage.empty()) {
    for (VertexSet& set : state.residual.all()) set -= state.coverage;
  }
  return state;
}

SingleChoice largest_increase(GreedyState& state) {
  const std::size_t n = state.members.capacity();
  const auto inside = state.members.members();
  SingleChoice best{std::nullopt, VertexSet(n)};
  std::size_t best_size = 0;
  for (Vertex i = 0; i < n; ++i) {
    if (state.members.contains(i)) continue;
    VertexSet& gain = state.single_gains[i];
    gain.clear();
    for (Vertex j : inside) gain |= state.residual(i, j);
    if (gain.size() > best_size) {
      best_size = gain.size();
      best.vertex = i;
    }
  }
  if (best.vertex) best.gain = state.single_gains[*best.vertex];
  return best;
}

PairChoice largest_increase_pair(const GreedyState& state) {
  const std::size_t n = state.members.capacity();
  std::vector<Vertex> outside;
  for (Vertex i = 0; i < n; ++i) {
    if (!state.members.contains(i)) outside.push_back(i);
  }
  PairChoice best{std::nullopt, VertexSet(n)};
  std::size_t best_size = 0;
  for (std::size_t a = 0; a < outside.size(); ++a) {
    const Vertex i = outside[a];
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      const Vertex j = outside[b];
      const std::size_t size =
          union_size(state.residual(i, j), state.single_gains[i], state.single_gains[j]);
      if (size > best_size) {
        best_size = size;
        best.pair = {i, j};
      }
    }
  }
  if (best.pair) {
    const auto [i, j] = *best.pair;
    best.gain = state.residual(i, j);
    best.gain |= state.single_gains[i];
    best.gain |= state.single_gains[j];
  }
  return best;
}

void commit(GreedyState& state, std::span<const Vertex> added, const VertexSet& gain) {
  for (Vertex v : added) state.members.insert(v);
  state.coverage |= gain;
  for (VertexSet& set : state.residual.all()) {
    if (!set.empty()) set -= state.coverage;
  }
}

VertexSet greedy_geodetic_set(const Graph& g, const IntervalTable& pristine,
                              bool add_one) {
  const std::size_t n = g.num_vertices();
  if (n == 1) return VertexSet(1, {0});

  GreedyState state = greedy_init(g, pristine);
  // The first pair search runs in both modes: with S empty every single
  // gain is empty and only a pair can start the coverage.
  SingleChoice single = largest_increase(state);
  PairChoice pair = largest_increase_pair(state);

  while (single.gain.size() + pair.gain.size() > 0) {
    const std::size_t covered_before = state.coverage.size();
    // |I_l[S]| > |I_kh[S]| / 2, kept in integers.
    if (2 * single.gain.size() > pair.gain.size()) {
      const Vertex added[] = {*single.vertex};
      commit(state, added, single.gain);
    } else {
      const Vertex added[] = {pair.pair->first, pair.pair->second};
      commit(state, added, pair.gain);
    }
    if (state.coverage.size() <= covered_before) {
      throw AlgorithmError("greedy step did not extend the coverage");
    }
    single = largest_increase(state);
    pair = add_one ? PairChoice{std::nullopt, VertexSet(n)}
                   : largest_increase_pair(state);
  }

  if (state.coverage.size() != n) {
    throw AlgorithmError("greedy loop stopped with " +
                         std::to_string(n - state.coverage.size()) +
                         " uncovered vertices");
  }
  return state.members;
}

GeodeticResult greedy_geodetic(const Graph& g, bool add_one) {
  require_connected(g);
  const auto start = std::chrono::steady_clock::now();
  const IntervalTable pristine = interval_table(all_pairs_distances(g));
  VertexSet set = greedy_geodetic_set(g, pristine, add_one);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  if (!is_geodetic(pristine, set)) {
    throw AlgorithmError("greedy produced a non-geodetic set");
  }
  GeodeticResult result;
  result.algorithm = add_one ? Algorithm::GreedyAddOne : Algorithm::Greedy;
  result.value = set.size();
  result.set = std::move(set);
  result.optimal = false;
  result.verified = true;
  result.elapsed_seconds = elapsed.count();
  return result;
}

}  // namespace geodetic
