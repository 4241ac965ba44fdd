#include "geodetic/result.hpp"

namespace geodetic {

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::Exact: return "exact";
    case Algorithm::BruteForce: return "brute";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::GreedyAddOne: return "greedy-addone";
    case Algorithm::LocallyGreedy: return "locally-greedy";
  }
  return "?";
}

}  // namespace geodetic
