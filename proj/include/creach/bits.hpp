#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace creach {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr int kMaxCells = 128;

// Fixed-length bit string. Cell 0 is the most significant bit, so the integer
// value of a k-bit prefix is the prefix's rank among all k-bit strings; the
// reachability tree uses that rank as its edge index.
struct Bits {
  u128 val = 0;
  int len = 0;

  int bit(int i) const { return static_cast<int>(val >> (len - 1 - i)) & 1; }
  Bits prefix(int k) const { return {val >> (len - k), k}; }
  Bits child(int b) const { return {(val << 1) | static_cast<u128>(b), len + 1}; }
  Bits parent() const { return {val >> 1, len - 1}; }

  friend bool operator==(const Bits&, const Bits&) = default;
  friend bool operator<(const Bits& a, const Bits& b) {
    return a.len != b.len ? a.len < b.len : a.val < b.val;
  }
};

inline Bits bits_of(u128 v, int len) { return {v, len}; }

std::string to_string(const Bits& b);
Bits parse_bits(std::string_view s);  // throws std::invalid_argument

inline u64 mix64(u64 z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct U128Hash {
  std::size_t operator()(u128 v) const {
    return mix64(static_cast<u64>(v) ^ mix64(static_cast<u64>(v >> 64)));
  }
};

}  // namespace creach
