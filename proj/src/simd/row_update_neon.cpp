#include "tal/simd/exchange_kernels.hpp"

#if defined(__ARM_NEON)
#include <arm_neon.h>

namespace tal::simd::detail {

void row_update_neon(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef,
                     std::size_t len) {
  const int32x4_t c = vdupq_n_s32(coef);
  const int32x4_t abs_c = vdupq_n_s32(coef < 0 ? -coef : coef);
  for (std::size_t j = 0; j < len; j += 4) {
    int32x4_t p = vld1q_s32(pivot + j);
    int32x4_t t = vaddq_s32(vmulq_s32(abs_c, p), vmulq_s32(c, vabsq_s32(p)));
    vst1q_s32(row + j, vaddq_s32(vld1q_s32(row + j), vshrq_n_s32(t, 1)));
  }
}

} // namespace tal::simd::detail

#else

namespace tal::simd::detail {

void row_update_neon(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef,
                     std::size_t len) {
  row_update_scalar(row, pivot, coef, len);
}

} // namespace tal::simd::detail

#endif
