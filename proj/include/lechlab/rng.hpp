#ifndef LECHLAB_RNG_HPP
#define LECHLAB_RNG_HPP

#include <cstdint>

namespace lechlab {

/// Portable xorshift64* generator (shifts 12, 25, 27, multiplier
/// 0x2545F4914F6CDD1D), seeded through one splitmix64 step so that seed
/// 0 is usable. Identical streams on every platform.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    state = (z ^ (z >> 31)) | 1;  // nonzero
  }

  uint64_t next() {
    uint64_t x = state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform in [lo, hi] inclusive.
  int64_t uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace lechlab

#endif
