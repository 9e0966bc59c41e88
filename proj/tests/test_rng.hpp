#pragma once

// Small deterministic generator for building randomized test instances.
// Kept independent of the library's counter-based RNG so tests do not
// validate the generator with itself.

#include <cmath>
#include <cstdint>

namespace testrng {

class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53 + 0x1.0p-54; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t s_;
};

}  // namespace testrng
