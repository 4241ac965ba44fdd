#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

enum class Family { ER, WS, BA };

std::string_view to_string(Family family) noexcept;
/// Accepts "er", "ws", "ba" in any case.
std::optional<Family> parse_family(std::string_view text) noexcept;

struct GenSpec {
  Family family = Family::ER;
  std::size_t n = 0;
  std::size_t m_target = 0;
  std::uint64_t seed = 0;
  double ws_rewire_prob = 0.05;
};

/// Throws ValidationError unless n-1 <= m_target <= n(n-1)/2, m_target > 0
/// and the rewiring probability lies in [0, 1].
void validate(const GenSpec& spec);

inline constexpr int kGenerationRetries = 100;

/// Draws a simple connected graph with exactly spec.n vertices and
/// spec.m_target edges. A pure function of spec.
///
///  ER  uniform over all graphs with n vertices and m edges (G(n, m)).
///  WS  ring lattice with 2*floor(m/n) nearest neighbors, each lattice edge
///      rewired with probability ws_rewire_prob, topped up with uniformly
///      random extra edges to exactly m.
///  BA  clique on d+1 vertices, d = max(1, floor(m/n)); every later vertex
///      attaches d edges by preferential attachment; topped up with
///      uniformly random extra edges to exactly m.
///
/// Disconnected draws are redrawn with a fresh sub-seed, at most
/// kGenerationRetries times, after which GenerationError is thrown.
Graph generate(const GenSpec& spec);

enum class GridScheme { Standard, Large };

/// floor(percent * n(n-1)/2 / 100), exact in integer arithmetic.
std::size_t edges_for_percent(std::size_t n, unsigned percent) noexcept;
/// floor(density * n(n-1)/2) with a small tolerance for decimal densities.
std::size_t edges_for_density(std::size_t n, double density) noexcept;

std::vector<std::size_t> grid_sizes(GridScheme scheme);
std::vector<unsigned> grid_percents(GridScheme scheme);

/// Every (n, density) cell of a scheme for one family, n-major. Cell i gets
/// seed seed_base + i.
std::vector<GenSpec> benchmark_grid(GridScheme scheme, Family family,
                                    std::uint64_t seed_base = 0);

}  // namespace geodetic
