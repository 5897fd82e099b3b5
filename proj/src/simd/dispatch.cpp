#include <atomic>
#include <string>

#include "kernels_impl.hpp"
#include "monopath/errors.hpp"

namespace monopath::simd {

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

const Kernels& scalar_kernels() { return detail::kScalarKernels; }

bool cpu_supports(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(MONOPATH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const Kernels* avx2_kernels() {
#if defined(MONOPATH_HAVE_AVX2)
  return cpu_supports(Backend::avx2) ? &detail::kAvx2Kernels : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const Kernels* detect() {
  if (const Kernels* k = avx2_kernels()) return k;
  return &detail::kScalarKernels;
}

std::atomic<const Kernels*>& active() {
  static std::atomic<const Kernels*> table{detect()};
  return table;
}

}  // namespace

const Kernels& kernels() { return *active().load(std::memory_order_relaxed); }

void select_backend(Backend backend) {
  if (backend == Backend::scalar) {
    active().store(&detail::kScalarKernels);
    return;
  }
  const Kernels* table = avx2_kernels();
  if (table == nullptr)
    throw InvalidArgument("SIMD backend '" + std::string(backend_name(backend)) + "' is not available");
  active().store(table);
}

Backend active_backend() { return kernels().backend; }

}  // namespace monopath::simd
