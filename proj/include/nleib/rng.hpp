#pragma once

#include <cstdint>

namespace nleib {

/// splitmix64: tiny, portable, deterministic across platforms. Used for
/// all seeded randomized searches and property-test generators so that
/// reports are reproducible bit for bit.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// Per-trial stream so results do not depend on execution order or
/// partitioning: trial i always sees the same stream for a fixed seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 s(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
  return s.next();
}

/// Uniform-ish integer in [lo, hi] by modulo; exact determinism matters
/// here, distribution quality does not.
inline long uniform_int(SplitMix64& rng, long lo, long hi) {
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng.next() % range);
}

}  // namespace nleib
