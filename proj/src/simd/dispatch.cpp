#include <cstdlib>
#include <cstring>
#include <vector>

#include "tal/simd/exchange_kernels.hpp"

namespace tal::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
  case Isa::Scalar: return "scalar";
  case Isa::Avx2: return "avx2";
  case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
  case Isa::Scalar: return true;
  case Isa::Avx2:
#if defined(TAL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  case Isa::Neon:
#if defined(__ARM_NEON)
    return true;
#else
    return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa chosen = [] {
    const char* forced = std::getenv("TAL_SIMD");
    if (forced && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
  }();
  return chosen;
}

void mutate_in_place(ExchangeMatrix& b, std::size_t k) { mutate_in_place(b, k, active_isa()); }

void mutate_in_place(ExchangeMatrix& b, std::size_t k, Isa isa) {
  const std::size_t n = b.size();
  const std::size_t stride = b.stride();
  auto update = &detail::row_update_scalar;
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) update = &detail::row_update_avx2;
  if (isa == Isa::Neon && isa_available(Isa::Neon)) update = &detail::row_update_neon;

  std::vector<std::int32_t> pivot(b.row(k).begin(), b.row(k).end());
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    const std::int32_t coef = b(i, k);
    if (coef != 0) update(b.row(i).data(), pivot.data(), coef, stride);
  }
  // The pivot row has b[k][k] = 0, so column k is untouched by the updates.
  for (std::size_t j = 0; j < n; ++j) {
    b(k, j) = -b(k, j);
    if (j != k) b(j, k) = -b(j, k);
  }
}

} // namespace tal::simd
