#pragma once

#include <cmath>
#include <cstdint>

namespace sgpd {

// Counter-based random streams: every draw is a pure function of
// (seed, stream ids), so traces are reproducible bit-for-bit and
// independent of evaluation order.

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

inline uint64_t counter_hash(uint64_t seed, uint64_t s1, uint64_t s2, uint64_t s3) {
  uint64_t h = splitmix64(seed);
  h = hash_combine(h, s1);
  h = hash_combine(h, s2);
  h = hash_combine(h, s3);
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit_double(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double counter_uniform(uint64_t seed, uint64_t s1, uint64_t s2, uint64_t s3) {
  return to_unit_double(counter_hash(seed, s1, s2, s3));
}

// Standard normal via Box-Muller on two counter-driven uniforms.
inline double counter_gaussian(uint64_t seed, uint64_t s1, uint64_t s2, uint64_t s3) {
  double u1 = counter_uniform(seed, s1, s2, 2 * s3);
  double u2 = counter_uniform(seed, s1, s2, 2 * s3 + 1);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace sgpd
