#pragma once

#include "hvss/kernels.hpp"

namespace hvss::kernels {

extern const Ops kScalarOps;

#if defined(HVSS_HAVE_AVX2)
namespace avx2 {
extern const Ops kOps;
bool runtime_supported();
}  // namespace avx2
#endif

#if defined(HVSS_HAVE_NEON)
namespace neon {
extern const Ops kOps;
}  // namespace neon
#endif

}  // namespace hvss::kernels
