#include <algorithm>
#include <cmath>

#include "qtak/kernels.hpp"

namespace qtak::kernels {

namespace {

void compose_scalar(const std::uint32_t* outer, const std::uint32_t* inner, std::uint32_t* out,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = outer[inner[i]];
}

std::size_t count_fixed_points_scalar(const std::uint32_t* images, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += images[i] == i;
  return count;
}

void gemm_scalar(const double* a, const double* b, double* c, std::size_t n) {
  std::fill(c, c + n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      const double* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", compose_scalar, count_fixed_points_scalar, gemm_scalar,
                                 max_abs_diff_scalar};
  return table;
}

}  // namespace qtak::kernels
