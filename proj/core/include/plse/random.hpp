#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace plse {

using Rng = std::mt19937_64;

/// Uniform index in [0, size). `size` must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

/// SplitMix64 finalizer; derives independent sub-seeds from one seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace plse
