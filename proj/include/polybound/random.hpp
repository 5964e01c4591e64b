#pragma once

#include <cstdint>

namespace polybound {

// SplitMix64. Bit-exact across platforms, which keeps random instances
// reproducible from their seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound] (inclusive), by rejection.
  std::uint64_t uniform_inclusive(std::uint64_t bound) {
    const std::uint64_t range = bound + 1;
    if (range == 0) return next();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % range;
  }

 private:
  std::uint64_t state_;
};

}  // namespace polybound
