#pragma once

#include <cstdint>
#include <random>

namespace sta {

// Deterministic random stream. All draws are derived from raw mt19937_64
// output rather than std <random> distributions, whose sequences differ
// between standard library implementations. Same seed, same sequence,
// on any platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform real on [a, b).
  double uniform(double a, double b) {
    return a + (b - a) * next_unit();
  }

  // Uniform real on [0, 1).
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard Gaussian via Box-Muller, no spare cached.
  double gaussian() {
    double u1;
    do {
      u1 = next_unit();
    } while (u1 <= 0.0);
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform integer on [lo, hi], inclusive. Rejection sampling keeps the
  // distribution exact.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return engine_();  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return lo + v % range;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sta
