// NEON variants for aarch64. Uses explicit compare+select instead of
// vmaxq_f64 so signed-zero results stay bit-identical to the scalar table.

#include <arm_neon.h>

#include "kernels_tables.hpp"

namespace hvss::kernels::neon {

namespace {

void worse_rows_neon(double* dst, const double* src, std::size_t n,
                     std::size_t d, const double* bound) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* s = src + i * d;
    double* out = dst + i * d;
    std::size_t j = 0;
    for (; j + 2 <= d; j += 2) {
      const float64x2_t a = vld1q_f64(s + j);
      const float64x2_t b = vld1q_f64(bound + j);
      const uint64x2_t a_gt = vcgtq_f64(a, b);
      vst1q_f64(out + j, vbslq_f64(a_gt, a, b));
    }
    for (; j < d; ++j) {
      const double a = s[j];
      const double b = bound[j];
      out[j] = (a > b) ? a : b;
    }
  }
}

inline bool leq_all_impl(const double* a, const double* b, std::size_t d) {
  std::size_t j = 0;
  for (; j + 2 <= d; j += 2) {
    const float64x2_t va = vld1q_f64(a + j);
    const float64x2_t vb = vld1q_f64(b + j);
    const uint64x2_t gt = vcgtq_f64(va, vb);
    if (vgetq_lane_u64(gt, 0) != 0 || vgetq_lane_u64(gt, 1) != 0) {
      return false;
    }
  }
  for (; j < d; ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

bool leq_all_neon(const double* a, const double* b, std::size_t d) {
  return leq_all_impl(a, b, d);
}

std::size_t find_dominator_neon(const double* rows, std::size_t n,
                                std::size_t d, const double* q,
                                std::size_t skip) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip) continue;
    if (leq_all_impl(rows + i * d, q, d)) return i;
  }
  return n;
}

}  // namespace

const Ops kOps{"neon", worse_rows_neon, leq_all_neon, find_dominator_neon};

}  // namespace hvss::kernels::neon
