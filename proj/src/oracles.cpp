// Brute-force hypervolume oracles. Deliberately self-contained: plain loops,
// no kernel dispatch, no shared code with the recursion they are used to
// check.

#include "hvss/oracles.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "hvss/rng.hpp"

namespace hvss {

double hv_oracle_inclusion_exclusion(const Front& s, const ReferencePoint& r) {
  const std::size_t n = s.size();
  if (n == 0) return 0.0;
  if (n > 20) {
    throw std::invalid_argument(
        "inclusion-exclusion oracle limited to 20 points, got " +
        std::to_string(n));
  }
  if (s.dim() != r.dim()) {
    throw std::invalid_argument("oracle: dimension mismatch");
  }
  const std::size_t d = s.dim();
  const double* rows = s.view().data;
  double total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double vol = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      double corner = -1e300;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
          const double c = rows[i * d + j];
          if (c > corner) corner = c;
        }
      }
      double side = r[j] - corner;
      if (side < 0.0) side = 0.0;
      vol *= side;
    }
    total += (std::popcount(mask) % 2 == 1) ? vol : -vol;
  }
  return total;
}

double hv_oracle_monte_carlo(const Front& s, const ReferencePoint& r,
                             const Point& lower, std::uint64_t samples,
                             std::uint64_t seed) {
  if (samples == 0) {
    throw std::invalid_argument("monte carlo oracle: samples must be > 0");
  }
  if (lower.dim() != r.dim() || (!s.empty() && s.dim() != r.dim())) {
    throw std::invalid_argument("monte carlo oracle: dimension mismatch");
  }
  const std::size_t d = r.dim();
  const std::size_t n = s.size();
  const double* rows = s.view().data;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!(lower[j] <= rows[i * d + j])) {
        throw std::invalid_argument(
            "monte carlo oracle: lower bound exceeds point " +
            std::to_string(i) + " in coordinate " + std::to_string(j));
      }
    }
  }

  double box = 1.0;
  for (std::size_t j = 0; j < d; ++j) box *= r[j] - lower[j];

  Rng rng(seed);
  std::vector<double> x(d);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = lower[j] + rng.uniform01() * (r[j] - lower[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double* p = rows + i * d;
      bool dominated = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (p[j] > x[j]) {
          dominated = false;
          break;
        }
      }
      if (dominated) {
        ++hits;
        break;
      }
    }
  }
  return box * (static_cast<double>(hits) / static_cast<double>(samples));
}

}  // namespace hvss
