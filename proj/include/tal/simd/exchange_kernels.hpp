#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tal/quiver.hpp"

namespace tal::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// True when `isa` was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available ISA, unless TAL_SIMD=scalar forces the reference kernel.
Isa active_isa() noexcept;

/// Exchange-matrix mutation at index k, in place:
///   b'[i][j] = -b[i][j]                                     if i == k or j == k
///   b'[i][j] = b[i][j] + (|b[i][k]| b[k][j] + b[i][k] |b[k][j]|) / 2   otherwise
void mutate_in_place(ExchangeMatrix& b, std::size_t k);
void mutate_in_place(ExchangeMatrix& b, std::size_t k, Isa isa);

namespace detail {

// Row update: row[j] += (|coef| * pivot[j] + coef * |pivot[j]|) >> 1 for
// j in [0, len). `len` is a multiple of ExchangeMatrix::kLane.
void row_update_scalar(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef, std::size_t len);
void row_update_avx2(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef, std::size_t len);
void row_update_neon(std::int32_t* row, const std::int32_t* pivot, std::int32_t coef, std::size_t len);

} // namespace detail

} // namespace tal::simd
