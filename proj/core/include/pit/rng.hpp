#pragma once

#include <cstdint>

namespace pit {

// Deterministic 64-bit generator (splitmix64). All seeded randomness in the
// library flows through this so identical seeds reproduce identical artifacts
// on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t lim = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= lim) return r % bound;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace pit
