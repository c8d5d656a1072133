#include <cstdlib>
#include <string_view>

#include "qtak/kernels.hpp"

namespace qtak::kernels {

#ifndef QTAK_HAVE_AVX2_KERNELS
const KernelTable* avx2_kernels() { return nullptr; }
#endif

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("QTAK_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* simd = avx2_kernels()) return *simd;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace qtak::kernels
