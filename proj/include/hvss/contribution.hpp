#pragma once

#include <span>

#include "hvss/core.hpp"
#include "hvss/hypervolume.hpp"

namespace hvss {

/// Contribution by its definition: hv(S u {p}) - hv(S). Two full
/// hypervolume computations; kept as the reference path for tests. The
/// selectors use hvc_fast.
double hvc_definition(const Point& p, const Front& s, const ReferencePoint& r);

/// Reduced-set contribution: the inclusive box of p minus the measure of S
/// clipped up to p. Equal to hvc_definition up to rounding.
double hvc_fast(const Point& p, const Front& s, const ReferencePoint& r);

/// Allocation-free variant for hot loops. `s` may contain dominated rows.
double hvc_fast(std::span<const double> p, PointsView s,
                const ReferencePoint& r, HvWorkspace& ws);

/// Volume dominated by both a and b but by no member of s:
/// the contribution of worse(a, b) to s.
double joint_hvc(const Point& a, const Point& b, const Front& s,
                 const ReferencePoint& r);

/// Update rule for greedy inclusion: when p_new joins the selected set,
/// the contribution of a remaining candidate s drops by exactly the joint
/// contribution of s and p_new against the pre-insertion set. Results are
/// clamped at zero; a negative value beyond 1e-9 relative tolerance throws
/// ContractError because it signals a broken precondition upstream.
double hvc_update_after_add(double old_hvc, const Point& s, const Point& p_new,
                            const Front& s_before, const ReferencePoint& r);

/// Clamp-and-check step of the update rule, shared with the selector that
/// applies updates in bulk.
double apply_hvc_update(double old_hvc, double joint);

}  // namespace hvss
