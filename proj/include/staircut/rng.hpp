#pragma once

#include <cstdint>
#include <string_view>

namespace staircut {

// Algorithm identifier recorded in every report that carries random results.
inline constexpr const char* kRngAlgorithm = "splitmix64";

// SplitMix64: tiny, fast, reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound); bound must be nonzero. Rejection sampling
  // keeps the distribution exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

  // Uniform double in [0, 1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDULL;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ULL;
  x ^= x >> 33;
  return x;
}

// Deterministic child-seed derivation: numeric streams (trials, instances).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

// Deterministic child-seed derivation: named streams ("L"/"R" subtrees etc.).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return mix64(seed ^ h);
}

}  // namespace staircut
