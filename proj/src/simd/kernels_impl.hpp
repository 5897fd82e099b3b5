#pragma once

#include "monopath/simd/kernels.hpp"

namespace monopath::simd::detail {

extern const Kernels kScalarKernels;

#if defined(MONOPATH_HAVE_AVX2)
extern const Kernels kAvx2Kernels;
#endif

}  // namespace monopath::simd::detail
