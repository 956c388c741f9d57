#include "hvss/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <stdexcept>
#include <string_view>

#include "kernels_tables.hpp"

namespace hvss::kernels {

namespace {

// Scalar reference kernels. max() is written as (a > b) ? a : b so the
// signed-zero behaviour matches the vector compare+select sequences exactly
// and every table stays bit-identical.

void worse_rows_scalar(double* dst, const double* src, std::size_t n,
                       std::size_t d, const double* bound) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* s = src + i * d;
    double* out = dst + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      const double a = s[j];
      const double b = bound[j];
      out[j] = (a > b) ? a : b;
    }
  }
}

bool leq_all_scalar(const double* a, const double* b, std::size_t d) {
  for (std::size_t j = 0; j < d; ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

std::size_t find_dominator_scalar(const double* rows, std::size_t n,
                                  std::size_t d, const double* q,
                                  std::size_t skip) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip) continue;
    if (leq_all_scalar(rows + i * d, q, d)) return i;
  }
  return n;
}

const Ops* resolve_default() {
  const Ops* best = &kScalarOps;
#if defined(HVSS_HAVE_AVX2)
  if (avx2::runtime_supported()) best = &avx2::kOps;
#endif
#if defined(HVSS_HAVE_NEON)
  best = &neon::kOps;
#endif

  if (const char* env = std::getenv("HVSS_KERNELS")) {
    const std::string_view want(env);
    const Ops* chosen = nullptr;
    if (want == "scalar") {
      chosen = &kScalarOps;
    } else if (want == "avx2") {
#if defined(HVSS_HAVE_AVX2)
      if (avx2::runtime_supported()) chosen = &avx2::kOps;
#endif
    } else if (want == "neon") {
#if defined(HVSS_HAVE_NEON)
      chosen = &neon::kOps;
#endif
    }
    if (chosen) return chosen;
    std::cerr << "hvss: HVSS_KERNELS=" << want
              << " unavailable, using " << best->name << "\n";
  }
  return best;
}

std::atomic<const Ops*> g_active{nullptr};

const Ops* active_ptr() {
  const Ops* p = g_active.load(std::memory_order_acquire);
  if (p == nullptr) {
    p = resolve_default();
    g_active.store(p, std::memory_order_release);
  }
  return p;
}

const Ops* table_ptr(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalarOps;
    case Isa::Avx2:
#if defined(HVSS_HAVE_AVX2)
      if (avx2::runtime_supported()) return &avx2::kOps;
#endif
      return nullptr;
    case Isa::Neon:
#if defined(HVSS_HAVE_NEON)
      return &neon::kOps;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

}  // namespace

const Ops kScalarOps{"scalar", worse_rows_scalar, leq_all_scalar,
                     find_dominator_scalar};

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "?";
}

const Ops& active() { return *active_ptr(); }

Isa active_isa() {
  const Ops* p = active_ptr();
#if defined(HVSS_HAVE_AVX2)
  if (p == &avx2::kOps) return Isa::Avx2;
#endif
#if defined(HVSS_HAVE_NEON)
  if (p == &neon::kOps) return Isa::Neon;
#endif
  (void)p;
  return Isa::Scalar;
}

bool set_active(Isa isa) {
  const Ops* p = table_ptr(isa);
  if (p == nullptr) return false;
  g_active.store(p, std::memory_order_release);
  return true;
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  if (table_ptr(Isa::Avx2) != nullptr) out.push_back(Isa::Avx2);
  if (table_ptr(Isa::Neon) != nullptr) out.push_back(Isa::Neon);
  return out;
}

const Ops& table(Isa isa) {
  const Ops* p = table_ptr(isa);
  if (p == nullptr) {
    throw std::invalid_argument(std::string("kernel table unavailable: ") +
                                isa_name(isa));
  }
  return *p;
}

}  // namespace hvss::kernels
