#include <immintrin.h>

#include "avoid/kernels.hpp"

namespace avoid::kernels {
namespace {

void sub_scaled_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_sub_pd(y0, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    y1 = _mm256_sub_pd(y1, _mm256_mul_pd(va, _mm256_loadu_pd(x + i + 4)));
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_sub_pd(y0, _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] -= a * x[i];
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

void match_mask_avx2(const std::int32_t* v, std::int32_t target, std::uint8_t* out, std::size_t n) {
  const __m256i vt = _mm256_set1_epi32(target);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i eq = _mm256_cmpeq_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)), vt);
    auto bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
    for (unsigned l = 0; l < 8; ++l) out[i + l] = static_cast<std::uint8_t>((bits >> l) & 1u);
  }
  for (; i < n; ++i) out[i] = v[i] == target ? 1 : 0;
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Backend::Avx2, sub_scaled_avx2, dot_avx2, match_mask_avx2};
}

}  // namespace avoid::kernels
