#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace datadump::rng {

// Counter-based generation: every variate is a pure function of
// (seed, counter), so draws reproduce bit-identically under any
// partitioning of the index space.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

inline std::uint64_t splitmix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Pseudorandom 64-bit word at position `counter` of the stream keyed by
/// `seed` (splitmix64 evaluated at an arbitrary index).
inline std::uint64_t word_at(std::uint64_t seed, std::uint64_t counter) {
  return splitmix(mix(seed) + counter * kGolden);
}

/// Uniform draw in (0, 1], using the top 53 bits.
inline double u01(std::uint64_t word) {
  return static_cast<double>((word >> 11) + 1) * 0x1.0p-53;
}

/// Two independent standard normals from counters (counter, counter+1)
/// via Box-Muller.
inline std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t counter) {
  const double u1 = u01(word_at(seed, counter));
  const double u2 = u01(word_at(seed, counter + 1));
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace datadump::rng
