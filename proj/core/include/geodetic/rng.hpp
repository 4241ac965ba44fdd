#pragma once

#include <cstdint>
#include <limits>

namespace geodetic {

/// SplitMix64 (Steele, Lea, Flood). Used to expand a single 64-bit seed
/// into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna), seeded through SplitMix64.
/// Output is identical on every platform; bounded draws below use only
/// integer arithmetic so generated graphs are reproducible bit for bit.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept;
  bool bernoulli(double p) noexcept { return unit() < p; }

 private:
  std::uint64_t s_[4];
};

}  // namespace geodetic
