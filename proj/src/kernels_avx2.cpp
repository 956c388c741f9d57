// AVX2 variants of the inner-loop kernels. Compiled with -mavx2 in its own
// translation unit; entered only after the runtime dispatch confirms CPU
// support.

#include <immintrin.h>

#include "kernels_tables.hpp"

namespace hvss::kernels::avx2 {

namespace {

void worse_rows_avx2(double* dst, const double* src, std::size_t n,
                     std::size_t d, const double* bound) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* s = src + i * d;
    double* out = dst + i * d;
    std::size_t j = 0;
    for (; j + 4 <= d; j += 4) {
      const __m256d a = _mm256_loadu_pd(s + j);
      const __m256d b = _mm256_loadu_pd(bound + j);
      // vmaxpd(a, b) returns b when a == b, matching the scalar table.
      _mm256_storeu_pd(out + j, _mm256_max_pd(a, b));
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
  for (; j + 4 <= d; j += 4) {
    const __m256d va = _mm256_loadu_pd(a + j);
    const __m256d vb = _mm256_loadu_pd(b + j);
    const __m256d gt = _mm256_cmp_pd(va, vb, _CMP_GT_OQ);
    if (_mm256_movemask_pd(gt) != 0) return false;
  }
  for (; j < d; ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

bool leq_all_avx2(const double* a, const double* b, std::size_t d) {
  return leq_all_impl(a, b, d);
}

std::size_t find_dominator_avx2(const double* rows, std::size_t n,
                                std::size_t d, const double* q,
                                std::size_t skip) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip) continue;
    if (leq_all_impl(rows + i * d, q, d)) return i;
  }
  return n;
}

}  // namespace

bool runtime_supported() { return __builtin_cpu_supports("avx2"); }

const Ops kOps{"avx2", worse_rows_avx2, leq_all_avx2, find_dominator_avx2};

}  // namespace hvss::kernels::avx2
