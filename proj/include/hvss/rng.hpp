#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace hvss {

/// Deterministic random source used everywhere randomness is needed.
/// The raw stream is std::mt19937_64, which the C++ standard pins down
/// bit-for-bit; the value transforms below are spelled out explicitly
/// instead of going through std::*_distribution (whose outputs vary across
/// standard libraries), so a seed reproduces the same draws everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = gen_();
    while (x < threshold) x = gen_();
    return x % bound;
  }

  /// Standard normal via the Box-Muller transform (pairs generated
  /// together, second value cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hvss
