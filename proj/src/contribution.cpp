#include "hvss/contribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hvss/kernels.hpp"

namespace hvss {

namespace {

void require_dims(std::size_t pd, PointsView s, const ReferencePoint& r) {
  if (pd != r.dim() || (s.count > 0 && s.dim != pd)) {
    throw std::invalid_argument("contribution: dimension mismatch");
  }
}

inline double box_volume(const double* p, const double* ref, std::size_t d) {
  double v = 1.0;
  for (std::size_t j = 0; j < d; ++j) v *= ref[j] - p[j];
  return v;
}

}  // namespace

double hvc_definition(const Point& p, const Front& s, const ReferencePoint& r) {
  require_dims(p.dim(), s.view(), r);
  const std::size_t d = p.dim();
  std::vector<double> grown(s.view().data, s.view().data + s.size() * d);
  grown.insert(grown.end(), p.data(), p.data() + d);
  HvWorkspace ws;
  const double with_p = hv(PointsView{grown.data(), s.size() + 1, d}, r, ws);
  const double without_p = hv(s.view(), r, ws);
  return with_p - without_p;
}

double hvc_fast(std::span<const double> p, PointsView s,
                const ReferencePoint& r, HvWorkspace& ws) {
  const std::size_t d = p.size();
  const kernels::Ops& ops = kernels::active();
  // A point weakly dominated by a member of s contributes nothing, and the
  // clipped measure would only rediscover that at full cost.
  if (s.count > 0 &&
      ops.find_dominator(s.data, s.count, d, p.data(), s.count) != s.count) {
    return 0.0;
  }
  const double inclusive = box_volume(p.data(), r.data(), d);
  if (s.count == 0) return inclusive;
  return inclusive - ws.measure_clipped(s, p.data(), r.data());
}

double hvc_fast(const Point& p, const Front& s, const ReferencePoint& r) {
  require_dims(p.dim(), s.view(), r);
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (!(p[j] < r[j])) {
      throw std::invalid_argument(
          "contribution: point does not strictly dominate the reference in "
          "coordinate " + std::to_string(j));
    }
  }
  HvWorkspace ws;
  return hvc_fast(p.coords(), s.view(), r, ws);
}

double joint_hvc(const Point& a, const Point& b, const Front& s,
                 const ReferencePoint& r) {
  return hvc_fast(worse(a, b), s, r);
}

double apply_hvc_update(double old_hvc, double joint) {
  const double updated = old_hvc - joint;
  if (updated < 0.0) {
    const double tol = 1e-9 * std::max(1.0, std::abs(old_hvc));
    if (updated < -tol) {
      throw ContractError(
          "hvc update went negative beyond tolerance: old=" +
          std::to_string(old_hvc) + " joint=" + std::to_string(joint));
    }
    return 0.0;
  }
  return updated;
}

double hvc_update_after_add(double old_hvc, const Point& s, const Point& p_new,
                            const Front& s_before, const ReferencePoint& r) {
  return apply_hvc_update(old_hvc, joint_hvc(s, p_new, s_before, r));
}

}  // namespace hvss
