#pragma once

#include <cstdint>
#include <random>

namespace mingens {

// SplitMix64 finalizer; used to derive independent per-attempt seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return mix_seed(mix_seed(seed) ^ index); }

// Uniform integer in [0, n). std::uniform_int_distribution is
// implementation-defined, so outputs would differ between standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n);
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % n;
  }
}

}  // namespace mingens
