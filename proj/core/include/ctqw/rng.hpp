#pragma once

#include <cstdint>

namespace ctqw {

/// SplitMix64 (Steele/Lea/Flood constants). Output i is a pure hash of
/// seed + i*gamma, so replay is bit-exact on every platform and nearby
/// seeds give decorrelated streams. Ensemble code derives realization r
/// from seed base_seed + r.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, n) via threshold rejection. n must be nonzero.
  /// std::uniform_int_distribution is not stable across standard library
  /// implementations, which would break seed reproducibility.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static constexpr const char* name() { return "splitmix64"; }

 private:
  std::uint64_t state_;
};

}  // namespace ctqw
