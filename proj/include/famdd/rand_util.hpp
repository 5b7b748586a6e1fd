#pragma once
// Deterministic randomness helpers. std::shuffle and the standard
// distributions are not bit-stable across library implementations, so
// everything that feeds recorded results goes through these instead.

#include <cstdint>
#include <utility>
#include <vector>

namespace famdd {

// splitmix64: small, well mixed, and stable everywhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform enough for shuffling and case generation; the slight modulo
  // bias is irrelevant at the sizes used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Fisher-Yates with an explicit generator, identical output on every platform.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace famdd
