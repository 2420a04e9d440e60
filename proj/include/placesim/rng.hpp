#pragma once

#include <cstdint>

namespace placesim {

// splitmix64 (Vigna's published constants). Identical seeds yield identical
// sequences on every platform, which is what makes traces replayable across
// implementations.
class SplitMix64 {
 public:
  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Integer in [lo, hi], both inclusive. Plain modulo mapping: slightly
  // biased for ranges near 2^64 but bit-reproducible in any language.
  std::uint64_t next_in_range(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full 64-bit range
    return lo + next() % span;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace placesim
