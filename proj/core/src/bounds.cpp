#include "geodetic/bounds.hpp"

namespace geodetic {

std::size_t trivial_bound(const Graph& g) noexcept { return g.num_vertices(); }

std::size_t diameter_bound(const DistanceMatrix& dist) noexcept {
  return dist.size() - dist.diameter() + 1;
}

}  // namespace geodetic
