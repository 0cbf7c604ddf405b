#include "tal/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

#include "tal/error.hpp"

namespace tal {

namespace {

using Colouring = std::vector<int>;

std::size_t colour_count(const Colouring& c) {
  auto sorted = c;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Equitable refinement. New colours are ranks of (old colour, neighbour
// signature), so the relative order of existing cells is preserved.
Colouring refine(const ExchangeMatrix& b, Colouring col) {
  const std::size_t n = b.size();
  std::size_t cells = colour_count(col);
  for (;;) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = col[v];
      for (std::size_t u = 0; u < n; ++u)
        if (b(v, u) != 0) sig[v].second.emplace_back(col[u], b(v, u));
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    Colouring next(n);
    for (std::size_t v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    col = std::move(next);
    if (uniq.size() == cells) return col;
    cells = uniq.size();
  }
}

// Vertices u, v are twins when swapping them is an automorphism.
bool twins(const ExchangeMatrix& b, std::size_t u, std::size_t v) {
  if (b(u, v) != 0) return false;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (x == u || x == v) continue;
    if (b(u, x) != b(v, x)) return false;
  }
  return true;
}

std::string encode(const ExchangeMatrix& b, const std::vector<std::size_t>& order, bool wide) {
  const std::size_t n = b.size();
  std::string out;
  out.reserve(2 + n * n * (wide ? 4 : 1));
  out.push_back(static_cast<char>(n));
  out.push_back(wide ? 'W' : 'N');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int32_t e = b(order[i], order[j]);
      if (wide) {
        auto u = static_cast<std::uint32_t>(e) ^ 0x80000000u;
        for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((u >> s) & 0xff));
      } else {
        out.push_back(static_cast<char>(e + 128));
      }
    }
  }
  return out;
}

struct Search {
  const ExchangeMatrix& b;
  bool wide;
  CanonicalLabeling best;
  bool have_best = false;

  void run(const Colouring& col) {
    const std::size_t n = b.size();
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n; ++v) cells[col[v]].push_back(v);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.second.size() > 1; });
    if (target == cells.end()) {
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(col[v])] = v;
      std::string form = encode(b, order, wide);
      if (!have_best || form < best.form) {
        best = {std::move(order), std::move(form)};
        have_best = true;
      }
      return;
    }
    const auto& cell = target->second;
    std::vector<std::size_t> tried;
    for (std::size_t v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(b, t, v); })) continue;
      tried.push_back(v);
      Colouring next(n);
      for (std::size_t x = 0; x < n; ++x)
        next[x] = 2 * col[x] + ((col[x] == target->first && x != v) ? 1 : 0);
      run(refine(b, std::move(next)));
    }
  }
};

} // namespace

CanonicalLabeling canonical_labeling(const ExchangeMatrix& b, std::size_t cap) {
  if (b.size() > cap)
    throw SizeLimit("canonicalizer cap is " + std::to_string(cap) + " vertices, got " +
                    std::to_string(b.size()));
  bool wide = false;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (std::abs(b(i, j)) > 127) wide = true;
  Search search{b, wide, {}, false};
  search.run(refine(b, Colouring(b.size(), 0)));
  if (b.size() == 0) search.best.form = encode(b, {}, wide);
  return std::move(search.best);
}

std::string canonical_form(const ExchangeMatrix& b, std::size_t cap) {
  return canonical_labeling(b, cap).form;
}

std::string canonical_form(const Quiver& q, std::size_t cap) {
  return canonical_form(q.exchange_matrix(), cap);
}

bool is_isomorphic(const Quiver& a, const Quiver& b, std::size_t cap) {
  if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

} // namespace tal
