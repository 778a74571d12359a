#pragma once

#include <cstdint>

#include "polarfol/rational.hpp"

namespace polarfol {

// SplitMix64. Fixed constants, so sampled runs are reproducible across
// platforms given the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound) by rejection, no modulo bias.
  uint64_t below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform integer coordinate in [-1000, 1000].
  long coord() { return static_cast<long>(below(2001)) - 1000; }

  Vec coord_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = coord();
    return v;
  }

 private:
  uint64_t state_;
};

}  // namespace polarfol
