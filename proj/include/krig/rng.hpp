#ifndef KRIG_RNG_HPP
#define KRIG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

// Deterministic randomness helpers. All stochastic behavior in the library
// flows from a base seed through derive_seed, and all draws go through the
// functions below rather than std distributions, so that identical seeds
// give identical streams on every platform.

namespace krig::rng {

using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derived stream seed: fold each tag into the base with splitmix64.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t t : tags) h = splitmix64(h ^ t);
  return h;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform(eng);
}

/// Uniform index in {0, ..., n-1} by rejection (unbiased).
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = eng();
  } while (v >= limit);
  return v % n;
}

/// Standard normal draw (Box-Muller, one value per call).
inline double normal(Engine& eng) {
  double u1 = uniform(eng);
  while (u1 <= 0.0) u1 = uniform(eng);
  const double u2 = uniform(eng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

/// Fisher-Yates permutation of {0, ..., n-1}.
inline std::vector<std::size_t> permutation(Engine& eng, std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_index(eng, i));
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

// Stream tags for derived seeds (see README for the derivation rule).
namespace tag {
inline constexpr std::uint64_t initial_design = 0xA1;
inline constexpr std::uint64_t fit = 0xA2;
inline constexpr std::uint64_t candidates = 0xA3;
inline constexpr std::uint64_t test_set = 0xA4;
inline constexpr std::uint64_t lhd = 0xA5;
inline constexpr std::uint64_t downsample = 0xA6;
inline constexpr std::uint64_t replicate = 0xA7;
inline constexpr std::uint64_t pool_init = 0xA8;
}  // namespace tag

}  // namespace krig::rng

#endif
