#pragma once

// Data-parallel inner loops used by the permutation-group and projector code.
//
// Every kernel has a portable scalar reference. On x86-64 an AVX2/FMA variant
// is compiled with function-level target attributes and selected at runtime
// when the CPU supports it. Setting QTAK_KERNELS=scalar forces the reference
// implementation.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qtak::kernels {

struct KernelTable {
  std::string_view name;

  // out[i] = outer[inner[i]]  (outer after inner)
  void (*compose)(const std::uint32_t* outer, const std::uint32_t* inner, std::uint32_t* out,
                  std::size_t n);
  // #{i : images[i] == i}
  std::size_t (*count_fixed_points)(const std::uint32_t* images, std::size_t n);
  // c = a * b for dense row-major n x n matrices; c must not alias a or b.
  void (*gemm)(const double* a, const double* b, double* c, std::size_t n);
  // max_i |a[i] - b[i]|
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_kernels();
// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();
// The table chosen at first use.
const KernelTable& active();

}  // namespace qtak::kernels
