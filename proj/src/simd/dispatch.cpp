#include <cstdlib>
#include <string_view>

#include "ekr/simd/bitkernels.hpp"

namespace ekr::simd {

namespace detail {
#if defined(EKR_HAVE_AVX2)
const BitKernels& avx2_table();
#endif
#if defined(EKR_HAVE_NEON)
const BitKernels& neon_table();
#endif
}  // namespace detail

const BitKernels* avx2_kernels() {
#if defined(EKR_HAVE_AVX2)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const BitKernels* neon_kernels() {
#if defined(EKR_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

const BitKernels& active_kernels() {
  static const BitKernels& chosen = []() -> const BitKernels& {
    const char* env = std::getenv("EKR_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const BitKernels* k = avx2_kernels()) return *k;
    if (const BitKernels* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace ekr::simd
