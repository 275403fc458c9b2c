#pragma once

#include <cstdint>

namespace qgr {

/// Deterministic 64-bit generator (splitmix64). Produces the same stream on
/// every platform, which the standard library distributions do not promise.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Value in [0, bound); bound must be positive. Bias is irrelevant at the
/// tiny bounds used here.
inline std::uint64_t rng_below(std::uint64_t& state, std::uint64_t bound) {
  return splitmix64(state) % bound;
}

}  // namespace qgr
