#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "qbil/numerics.hpp"

namespace qbil {

// All randomness in the project flows through this wrapper so that sampled
// points are identical across platforms and worker counts. Distributions are
// hand-rolled; std:: distribution objects are not guaranteed stable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  uint64_t next() { return g_(); }

  double u01() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // log-uniform magnitude
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  int uniform_int(int lo, int hi) {  // inclusive
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + int(next() % span);
  }

  double phase() { return uniform(0.0, 2.0 * 3.14159265358979323846); }

  CDouble on_circle(double radius) {
    double p = phase();
    return CDouble(radius * std::cos(p), radius * std::sin(p));
  }

  // complex value with log-uniform modulus in [rlo, rhi] and uniform phase
  CDouble annulus(double rlo, double rhi) { return on_circle(log_uniform(rlo, rhi)); }

  // modulus interpolated geometrically between lo and hi with a safety band
  CDouble between(double lo, double hi, double band = 0.25) {
    double u = uniform(band, 1.0 - band);
    double r = std::exp((1.0 - u) * std::log(lo) + u * std::log(hi));
    return on_circle(r);
  }

  // small nonzero rational p/r with |p| <= pmax, 1 <= r <= rmax
  Rational rational(int pmax, int rmax, bool allow_negative = true) {
    int p = 0;
    while (p == 0) p = uniform_int(-pmax, pmax);
    if (!allow_negative) p = std::abs(p);
    int r = uniform_int(1, rmax);
    return Rational(p, r);
  }

  // rational base with 0 < |q| < 1
  Rational rational_base(int rmax = 9) {
    int r = uniform_int(2, rmax);
    int p = uniform_int(1, r - 1);
    return Rational(p, r);
  }

 private:
  std::mt19937_64 g_;
};

// Stable stream id for (seed, identity, point index).
inline uint64_t mix_seed(uint64_t seed, std::string_view id, uint64_t index) {
  uint64_t h = 1469598103934665603ull;
  for (char c : id) {
    h ^= uint64_t(uint8_t(c));
    h *= 1099511628211ull;
  }
  h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= index * 0xbf58476d1ce4e5b9ull;
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

}  // namespace qbil
