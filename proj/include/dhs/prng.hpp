#pragma once

#include <cstdint>

namespace dhs {

using u64 = std::uint64_t;

/// SplitMix64: the named stable generator used for every seeded probe, so
/// runs replicate bit-for-bit across platforms and implementations.
struct SplitMix64 {
  u64 state;

  explicit SplitMix64(u64 seed) : state(seed) {}

  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n); n-fold modulo, bias irrelevant at desk scale.
  u64 below(u64 n) { return next() % n; }
};

/// Stable derived seed for sub-streams (per-trial determinism independent of
/// scheduling).
inline u64 derive_seed(u64 seed, u64 stream) {
  SplitMix64 g(seed ^ (0x517cc1b727220a95ULL * (stream + 1)));
  return g.next();
}

}  // namespace dhs
