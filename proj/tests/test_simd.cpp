#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tal/simd/exchange_kernels.hpp"

using namespace tal;
using simd::Isa;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
    if (simd::isa_available(isa)) out.push_back(isa);
  return out;
}

} // namespace

TEST_CASE("row kernels agree with the scalar reference") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> v(-50, 50);
  for (std::size_t len : {8u, 16u, 64u, 136u}) {
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<std::int32_t> row(len), pivot(len);
      for (auto& x : row) x = v(rng);
      for (auto& x : pivot) x = v(rng);
      std::int32_t coef = v(rng);
      auto expect = row;
      simd::detail::row_update_scalar(expect.data(), pivot.data(), coef, len);
      for (std::size_t j = 0; j < len; ++j) {
        int a = std::abs(coef) * pivot[j] + coef * std::abs(pivot[j]);
        CHECK(expect[j] == row[j] + a / 2);
      }
      if (simd::isa_available(Isa::Avx2)) {
        auto got = row;
        simd::detail::row_update_avx2(got.data(), pivot.data(), coef, len);
        CHECK(got == expect);
      }
      if (simd::isa_available(Isa::Neon)) {
        auto got = row;
        simd::detail::row_update_neon(got.data(), pivot.data(), coef, len);
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("matrix mutation is identical for every ISA") {
  std::mt19937_64 rng(5);
  MESSAGE("active ISA: " << simd::to_string(simd::active_isa()));
  for (int i = 0; i < 300; ++i) {
    auto q = oracle::random_quiver(rng, 20, 3);
    auto b = q.exchange_matrix();
    for (std::size_t k = 0; k < b.size(); ++k) {
      auto want = oracle::mutate(oracle::matrix_of(b), k);
      for (Isa isa : available()) {
        auto m = b;
        simd::mutate_in_place(m, k, isa);
        CHECK(oracle::matrix_of(m) == want);
        CHECK(m.is_skew_symmetric());
      }
    }
  }
}

TEST_CASE("padding lanes stay zero") {
  ExchangeMatrix b(3);
  b(0, 1) = 2;
  b(1, 0) = -2;
  b(1, 2) = 1;
  b(2, 1) = -1;
  for (Isa isa : available()) {
    auto m = b;
    simd::mutate_in_place(m, 1, isa);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < m.stride(); ++j) CHECK(m.row(i)[j] == 0);
  }
}
