#pragma once

#include <cstdint>

namespace prismdom {

// SplitMix64 (Steele/Lea/Flood). Seeded output must be identical across
// platforms and standard-library versions, which rules out std engines
// combined with std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); rejection keeps the draw unbiased
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace prismdom
