#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace onestreet {

// splitmix64. Used instead of <random> engines + distributions because
// dataset bytes must not depend on the toolchain: libstdc++ and libc++
// implement std::shuffle and the continuous distributions differently.
struct SplitMix64 {
  std::uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  // One splitmix64 step: advance the counter and scramble it.
  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    std::uint64_t out = mix(state);
    state += kGamma;
    return out;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unit-rate exponential by inversion; log1p keeps small draws accurate.
  double exponential() { return -std::log1p(-uniform01()); }
};

// Unbiased integer in [0, n) via masked rejection. n must be >= 1.
inline std::uint64_t bounded(SplitMix64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t mask = ~0ull >> std::countl_zero(n - 1);
  for (;;) {
    const std::uint64_t v = rng.next() & mask;
    if (v < n) return v;
  }
}

// Stable per-task seed:
//   s0 = mix(master)
//   s1 = mix(s0 ^ 0x9E3779B97F4A7C15 * (stream + 1))
//   s2 = mix(s1 ^ 0xC2B2AE3D27D4EB4F * (index + 1))
// Pure integer arithmetic, so any row of a generated dataset can be
// regenerated in isolation, in any order, on any machine.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
  std::uint64_t s = SplitMix64::mix(master);
  s = SplitMix64::mix(s ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
  s = SplitMix64::mix(s ^ (0xC2B2AE3D27D4EB4Full * (index + 1)));
  return s;
}

}  // namespace onestreet
