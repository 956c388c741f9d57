#pragma once

#include <cstdint>

#include "hvss/core.hpp"

namespace hvss {

/// Inclusion-exclusion hypervolume, O(2^|S|). Test oracle: implemented
/// without any of the fast-path code so the two routes stay independent.
/// Requires |S| <= 20.
double hv_oracle_inclusion_exclusion(const Front& s, const ReferencePoint& r);

/// Monte Carlo hypervolume estimate over the box [lower, r]: the dominated
/// fraction of `samples` uniform draws times the box volume. Deterministic
/// for a fixed seed. Statistical test oracle for sets too large for
/// inclusion-exclusion. Requires samples > 0 and lower <= s componentwise
/// for every s.
double hv_oracle_monte_carlo(const Front& s, const ReferencePoint& r,
                             const Point& lower, std::uint64_t samples,
                             std::uint64_t seed);

}  // namespace hvss
