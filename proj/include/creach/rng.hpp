#pragma once

#include "creach/bits.hpp"

namespace creach {

// SplitMix64 stream with tag-derived substreams, so every trial in a batch
// draws from its own stream and parallel order cannot change the results.
struct SplitMix64 {
  u64 state = 0;

  explicit SplitMix64(u64 seed = 0) : state(seed) {}

  u64 next() {
    state += 0x9e3779b97f4a7c15ull;
    return mix64(state);
  }

  SplitMix64 sub(u64 tag) const {
    return SplitMix64(mix64(state + mix64(tag + 0xa0761d6478bd642full)));
  }

  // k uniform bits, k in 1..64; avoids modulo bias by construction.
  u64 draw_bits(int k) { return next() >> (64 - k); }

  u128 draw_bits128(int k) {
    if (k <= 64) return draw_bits(k);
    u128 hi = draw_bits(k - 64);
    return hi << 64 | next();
  }
};

}  // namespace creach
