#pragma once

#include <cstddef>

#include "geodetic/geodesy.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

/// g(G) <= n.
std::size_t trivial_bound(const Graph& g) noexcept;

/// g(G) <= n - diam(G) + 1.
std::size_t diameter_bound(const DistanceMatrix& dist) noexcept;

}  // namespace geodetic
