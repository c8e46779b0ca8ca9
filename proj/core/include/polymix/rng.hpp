#pragma once

#include <cstdint>

namespace polymix {

/// splitmix64: tiny, fully specified, splittable. Identical seeds give
/// identical streams on every platform, which the report determinism
/// contract relies on.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [0, bound) via rejection.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  long next_int(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// 53-bit uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Independent child stream.
  SplitMix64 split() { return SplitMix64(next_u64() ^ 0x6a09e667f3bcc909ull); }

 private:
  uint64_t state_;
};

}  // namespace polymix
