#pragma once

#include <cmath>
#include <cstdint>

namespace sigp {

// splitmix64 finalizer; the basis of every random stream in the library.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based draw: a pure function of the key words, so the same key
// yields the same value on every platform and under any parallel schedule.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b = 0, std::uint64_t c = 0,
                                  std::uint64_t d = 0) {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  h = mix64(h ^ d);
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller on two counter draws.
inline double gaussian(std::uint64_t h1, std::uint64_t h2) {
  double u = uniform01(h1);
  double v = uniform01(h2);
  if (u <= 0.0) u = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586477 * v);
}

}  // namespace sigp
