#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace segver {

/// SplitMix64 finalizer: a bijective 64-bit avalanche mix.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives a child seed from (seed, key). Used for per-trial seeds
/// mix(master, trialIndex) and per-cell seeds mix(master, cellKey).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) noexcept {
  return splitmix64(seed ^ splitmix64(key));
}

/// Order-sensitive key of an integer tuple.
constexpr std::uint64_t tuple_key(std::span<const int> values) noexcept {
  std::uint64_t h = 0x5345475645520001ULL ^ values.size();
  for (int v : values) h = mix_seed(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(v)));
  return h;
}

/// Uniform residue in [0, p) from a 64-bit engine by rejection sampling, so the
/// stream is identical on every standard library.
inline std::uint32_t uniform_residue(std::mt19937_64& rng, std::uint32_t p) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % p + 1) % p;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return static_cast<std::uint32_t>(x % p);
}

}  // namespace segver
