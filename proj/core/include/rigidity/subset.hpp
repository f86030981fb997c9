#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rigidity {

/// Vertex subsets of [m] (0-based) packed into a 64-bit mask; m <= 64.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool contains(Mask set, int i) { return (set >> i) & 1U; }
constexpr int popcount(Mask set) { return std::popcount(set); }
constexpr Mask full_mask(int m) { return m >= 64 ? ~Mask{0} : bit(m) - 1; }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> elements(Mask set) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(set)));
  while (set) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& xs) {
  Mask out = 0;
  for (int x : xs) out |= bit(x);
  return out;
}

/// Number of elements of `set` strictly below i.
constexpr int rank_below(Mask set, int i) {
  return popcount(set & (bit(i) - 1));
}

}  // namespace rigidity
