#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "qtak/kernels.hpp"

#define QTAK_AVX2 __attribute__((target("avx2,fma")))

namespace qtak::kernels {

namespace {

QTAK_AVX2 void compose_avx2(const std::uint32_t* outer, const std::uint32_t* inner,
                            std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + i));
    const __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(outer), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = outer[inner[i]];
}

QTAK_AVX2 std::size_t count_fixed_points_avx2(const std::uint32_t* images, std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(images + i));
    const __m256i eq = _mm256_cmpeq_epi32(v, iota);
    count += static_cast<std::size_t>(
        std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i) count += images[i] == i;
  return count;
}

QTAK_AVX2 void gemm_avx2(const double* a, const double* b, double* c, std::size_t n) {
  std::fill(c, c + n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      const __m256d av = _mm256_set1_pd(aik);
      const double* brow = b + k * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        const __m256d cv = _mm256_loadu_pd(crow + j);
        _mm256_storeu_pd(crow + j, _mm256_fmadd_pd(av, _mm256_loadu_pd(brow + j), cv));
      }
      for (; j < n; ++j) crow[j] = std::fma(aik, brow[j], crow[j]);
    }
  }
}

QTAK_AVX2 double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, d));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) out = std::max(out, std::fabs(a[i] - b[i]));
  return out;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  static const KernelTable table{"avx2", compose_avx2, count_fixed_points_avx2, gemm_avx2,
                                 max_abs_diff_avx2};
  return supported ? &table : nullptr;
}

}  // namespace qtak::kernels
