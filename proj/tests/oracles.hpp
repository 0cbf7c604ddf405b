#pragma once
// Independent reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tal/quiver.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix matrix_of(const tal::Quiver& q) {
  Matrix b(q.vertex_count(), std::vector<int>(q.vertex_count(), 0));
  for (const auto& a : q.arrows()) {
    auto i = q.index_of(a.from), j = q.index_of(a.to);
    ++b[i][j];
    --b[j][i];
  }
  return b;
}

inline Matrix matrix_of(const tal::ExchangeMatrix& m) {
  Matrix b(m.size(), std::vector<int>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) b[i][j] = m(i, j);
  return b;
}

// Textbook matrix mutation, case by case.
inline Matrix mutate(const Matrix& b, std::size_t k) {
  Matrix out = b;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == k || j == k) out[i][j] = -b[i][j];
      else if (b[i][k] > 0 && b[k][j] > 0) out[i][j] = b[i][j] + b[i][k] * b[k][j];
      else if (b[i][k] < 0 && b[k][j] < 0) out[i][j] = b[i][j] - b[i][k] * b[k][j];
    }
  return out;
}

// Isomorphism by trying every permutation; only for small quivers.
inline bool isomorphic(const tal::Quiver& x, const tal::Quiver& y) {
  if (x.vertex_count() != y.vertex_count() || x.arrow_count() != y.arrow_count()) return false;
  auto a = matrix_of(x), b = matrix_of(y);
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Random mutation walk; never mutates the same vertex twice in a row.
inline tal::Quiver random_walk(tal::Quiver q, int steps, std::mt19937_64& rng) {
  std::size_t last = q.vertex_count();
  for (int s = 0; s < steps; ++s) {
    std::size_t k;
    do {
      k = std::uniform_int_distribution<std::size_t>(0, q.vertex_count() - 1)(rng);
    } while (k == last && q.vertex_count() > 1);
    last = k;
    q = tal::renormalized(tal::mutate(q, q.vertices()[k]));
  }
  return q;
}

} // namespace oracle

#include "tal/gentle.hpp"
#include <set>

namespace oracle {

// Cartan matrix by listing every arrow sequence up to `max_len` explicitly.
inline Matrix path_count(const tal::GentleAlgebra& a, std::size_t max_len) {
  const auto& q = a.quiver;
  std::set<std::pair<std::string, std::string>> rel(a.relations.begin(), a.relations.end());
  Matrix c(q.vertex_count(), std::vector<int>(q.vertex_count(), 0));
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) ++c[i][i];
  for (std::size_t x = 0; x < q.arrow_count(); ++x) layer.push_back({x});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& path : layer) {
      const auto& first = q.arrows()[path.front()];
      const auto& last = q.arrows()[path.back()];
      ++c[q.index_of(first.from)][q.index_of(last.to)];
      for (std::size_t y = 0; y < q.arrow_count(); ++y) {
        const auto& b = q.arrows()[y];
        if (b.from != last.to || rel.contains({last.id, b.id})) continue;
        auto longer = path;
        longer.push_back(y);
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return c;
}

} // namespace oracle

namespace oracle {

// Random quiver with up to `max_n` vertices, shuffled labels and entries in [-m, m].
inline tal::Quiver random_quiver(std::mt19937_64& rng, std::size_t max_n, int m = 2) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  tal::ExchangeMatrix b(n);
  std::uniform_int_distribution<int> entry(-m, m);
  std::bernoulli_distribution present(0.4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (present(rng)) {
        b(i, j) = entry(rng);
        b(j, i) = -b(i, j);
      }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::shuffle(labels.begin(), labels.end(), rng);
  return tal::Quiver::from_exchange_matrix(labels, b);
}

} // namespace oracle
