#include "kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace nclandau::kernels {

const KernelTable& scalar_table() {
  static const KernelTable t{"scalar",         scalar::caxpy, scalar::cdotc,       scalar::cdotu,
                             scalar::cher2_row, scalar::crot,  scalar::max_abs_diff};
  return t;
}

const KernelTable* avx2_table() {
#if defined(NCLANDAU_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const KernelTable t{"avx2",         avx2::caxpy, avx2::cdotc,       avx2::cdotu,
                             avx2::cher2_row, avx2::crot,  avx2::max_abs_diff};
  return supported ? &t : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("NCLANDAU_FORCE_SCALAR");
    const bool force = env && *env && std::string_view(env) != "0";
    const KernelTable* simd = avx2_table();
    return (!force && simd) ? simd : &scalar_table();
  }();
  return *chosen;
}

}  // namespace nclandau::kernels
