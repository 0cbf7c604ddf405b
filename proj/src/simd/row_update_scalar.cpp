#include <cstdlib>

#include "tal/simd/exchange_kernels.hpp"

namespace tal::simd::detail {

void row_update_scalar(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef,
                       std::size_t len) {
  const std::int32_t abs_coef = std::abs(coef);
  for (std::size_t j = 0; j < len; ++j) {
    const std::int32_t p = pivot[j];
    row[j] += (abs_coef * p + coef * std::abs(p)) >> 1;
  }
}

} // namespace tal::simd::detail
