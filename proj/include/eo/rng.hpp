#pragma once

#include <cstdint>

namespace eo {

// splitmix64: tiny, stateless but for a counter, identical output on every
// platform. All seeded behaviour in the library goes through this.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace eo
