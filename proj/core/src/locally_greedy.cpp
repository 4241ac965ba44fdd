#include "geodetic/locally_greedy.hpp"

#include <chrono>

#include "geodetic/errors.hpp"
#include "geodetic/geodesy.hpp"

namespace geodetic {

Vertex find_start(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) return v;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_simplicial(g, v)) return v;
  }
  Vertex best = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

LocalState make_local_state(std::size_t n, Vertex seed) {
  LocalState state{VertexSet(n), VertexSet(n), VertexSet::full(n), {},
                   std::vector<VertexSet>(n, VertexSet(n))};
  state.members.insert(seed);
  return state;
}

std::optional<LocalChoice> largest_local_increase(const Graph& g, Vertex w,
                                                  LocalState& state) {
  const std::size_t n = g.num_vertices();
  if (state.members.size() == n) return std::nullopt;

  auto& row = state.rows[w];
  row = sssp_intervals(g, w);

  std::optional<Vertex> best;
  std::size_t best_residual = 0;
  for (Vertex j = 0; j < n; ++j) {
    if (state.members.contains(j)) continue;
    state.gains[j] |= row[j];
    const std::size_t residual = state.gains[j].count_minus(state.coverage);
    if (!best || residual > best_residual) {
      best = j;
      best_residual = residual;
    }
  }
  return LocalChoice{*best, state.gains[*best]};
}

LocalState locally_greedy_run(const Graph& g, Vertex seed) {
  const std::size_t n = g.num_vertices();
  LocalState state = make_local_state(n, seed);
  if (n == 1) {
    state.coverage.insert(seed);
    state.remaining.clear();
    return state;
  }

  Vertex w = seed;
  bool first = true;
  do {
    auto choice = largest_local_increase(g, w, state);
    if (!choice) throw AlgorithmError("locally greedy ran out of candidates");
    const std::size_t remaining_before = state.remaining.size();
    const Vertex u = choice->vertex;
    state.members.insert(u);
    state.coverage |= choice->gain;
    if (first) state.coverage.insert(seed);
    state.coverage.insert(u);
    state.remaining -= state.coverage;
    if (state.remaining.size() >= remaining_before) {
      throw AlgorithmError("locally greedy step did not shrink the remaining set");
    }
    w = u;
    first = false;
  } while (!state.remaining.empty());
  return state;
}

GeodeticResult locally_greedy_geodetic(const Graph& g) {
  require_connected(g);
  const auto start = std::chrono::steady_clock::now();
  LocalState state = locally_greedy_run(g, find_start(g));
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const IntervalTable pristine = interval_table(all_pairs_distances(g));
  if (!is_geodetic(pristine, state.members)) {
    throw AlgorithmError("locally greedy produced a non-geodetic set");
  }
  GeodeticResult result;
  result.algorithm = Algorithm::LocallyGreedy;
  result.value = state.members.size();
  result.set = std::move(state.members);
  result.verified = true;
  result.elapsed_seconds = elapsed.count();
  return result;
}

}  // namespace geodetic
