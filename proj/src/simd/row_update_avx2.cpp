// Compiled with -mavx2 only; callers reach it through the runtime dispatcher.
#include "tal/simd/exchange_kernels.hpp"

#if defined(TAL_HAVE_AVX2)
#include <immintrin.h>

namespace tal::simd::detail {

void row_update_avx2(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef,
                     std::size_t len) {
  const __m256i c = _mm256_set1_epi32(coef);
  const __m256i abs_c = _mm256_set1_epi32(coef < 0 ? -coef : coef);
  for (std::size_t j = 0; j < len; j += 8) {
    __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pivot + j));
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
    __m256i t = _mm256_add_epi32(_mm256_mullo_epi32(abs_c, p),
                                 _mm256_mullo_epi32(c, _mm256_abs_epi32(p)));
    r = _mm256_add_epi32(r, _mm256_srai_epi32(t, 1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), r);
  }
}

} // namespace tal::simd::detail

#else

namespace tal::simd::detail {

void row_update_avx2(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef,
                     std::size_t len) {
  row_update_scalar(row, pivot, coef, len);
}

} // namespace tal::simd::detail

#endif
