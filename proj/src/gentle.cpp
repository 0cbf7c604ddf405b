#include "tal/gentle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tal/error.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

bool GentleAlgebra::is_relation(const std::string& first, const std::string& second) const {
  return std::find(relations.begin(), relations.end(), std::pair{first, second}) != relations.end();
}

GentleAlgebra cluster_tilted(const Quiver& q) {
  auto d = decompose(q);
  GentleAlgebra a{q, {}};
  for (const auto& t : oriented_triangles(d))
    for (std::size_t k = 0; k < 3; ++k) a.relations.emplace_back(t[k], t[(k + 1) % 3]);
  std::sort(a.relations.begin(), a.relations.end());
  return a;
}

std::vector<Violation> validate_gentle(const GentleAlgebra& a) {
  const auto& q = a.quiver;
  std::vector<Violation> out;
  std::set<std::pair<std::string, std::string>> rel;
  for (const auto& [x, y] : a.relations) {
    auto ix = q.find_arrow(x), iy = q.find_arrow(y);
    if (!ix || !iy) {
      out.push_back({3, "relation mentions an unknown arrow", {x, y}});
      continue;
    }
    if (q.arrows()[*ix].to != q.arrows()[*iy].from) {
      out.push_back({3, "relation is not a composable path of length 2", {x, y}});
      continue;
    }
    rel.emplace(x, y);
  }

  for (const auto& v : q.vertices()) {
    auto in = q.in_arrows(v).size(), outd = q.out_arrows(v).size();
    if (in > 2) out.push_back({1, "more than two arrows end at " + v, {v}});
    if (outd > 2) out.push_back({1, "more than two arrows start at " + v, {v}});
  }

  for (const auto& alpha : q.arrows()) {
    std::vector<std::string> free_after, rel_after, free_before, rel_before;
    for (const auto& b : q.out_arrows(alpha.to))
      (rel.contains({alpha.id, b}) ? rel_after : free_after).push_back(b);
    for (const auto& b : q.in_arrows(alpha.from))
      (rel.contains({b, alpha.id}) ? rel_before : free_before).push_back(b);
    auto report = [&](int cond, const std::vector<std::string>& xs, const std::string& what) {
      if (xs.size() < 2) return;
      std::vector<std::string> w{alpha.id};
      w.insert(w.end(), xs.begin(), xs.end());
      out.push_back({cond, "arrow " + alpha.id + " has " + std::to_string(xs.size()) + " " + what, w});
    };
    report(2, free_after, "non-zero continuations");
    report(2, free_before, "non-zero predecessors");
    report(4, rel_after, "zero continuations");
    report(4, rel_before, "zero predecessors");
  }
  return out;
}

CartanMatrix cartan(const GentleAlgebra& a) {
  const auto& q = a.quiver;
  const std::size_t n = q.vertex_count();
  std::set<std::pair<std::string, std::string>> rel(a.relations.begin(), a.relations.end());
  CartanMatrix c{q.vertices(), std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};

  std::function<void(std::size_t, const Arrow&, std::size_t)> walk = [&](std::size_t i, const Arrow& last,
                                                                          std::size_t len) {
    if (len > 2 * n) throw InfiniteDimensional("nonzero path longer than " + std::to_string(2 * n));
    ++c.matrix[i][q.index_of(last.to)];
    for (const auto& id : q.out_arrows(last.to)) {
      if (rel.contains({last.id, id})) continue;
      walk(i, q.arrow(id), len + 1);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    c.matrix[i][i] += 1;
    for (const auto& id : q.out_arrows(q.vertices()[i])) walk(i, q.arrow(id), 1);
  }
  return c;
}

namespace {

std::vector<std::vector<int>> transposed(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<int>> t(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

} // namespace

CartanMatrix bb_cartan(const GentleAlgebra& a, const TwoTermComplexSpec& spec) {
  const auto& q = a.quiver;
  const auto k = q.index_of(spec.pivot);
  const bool incoming = spec.side == TwoTermComplexSpec::Side::Incoming;
  auto c = cartan(a);
  // The outgoing construction is the incoming one for the opposite algebra.
  auto base = incoming ? c.matrix : transposed(c.matrix);

  auto neighbours = incoming ? q.in_arrows(spec.pivot) : q.out_arrows(spec.pivot);
  if (neighbours.empty())
    throw InvariantViolation("pivot '" + spec.pivot + "' has no " + (incoming ? "incoming" : "outgoing") + " arrow");

  // Summand terms (degree, projective index).
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::pair<int, std::size_t>>> terms(n);
  for (std::size_t v = 0; v < n; ++v) terms[v] = {{0, v}};
  terms[k] = {{-1, k}};
  for (const auto& id : neighbours) {
    const auto& arr = q.arrow(id);
    terms[k].emplace_back(0, q.index_of(incoming ? arr.from : arr.to));
  }

  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto [r, x] : terms[j])
        for (auto [s, y] : terms[i]) e[i][j] += ((r - s) % 2 == 0 ? 1 : -1) * base[y][x];
  return {c.order, incoming ? e : transposed(e)};
}

TwoTermComplexSpec complex_for_pivot(const Quiver& q, const std::string& pivot) {
  using Side = TwoTermComplexSpec::Side;
  return {pivot, q.in_arrows(pivot).size() >= q.out_arrows(pivot).size() ? Side::Incoming : Side::Outgoing};
}

bool equal_up_to_permutation(const CartanMatrix& x, const CartanMatrix& y) {
  const std::size_t n = x.matrix.size();
  if (y.matrix.size() != n) return false;
  // Cheap invariant per index: diagonal plus sorted row and column.
  auto signature = [](const std::vector<std::vector<int>>& m, std::size_t i) {
    std::vector<int> row = m[i], col;
    for (const auto& r : m) col.push_back(r[i]);
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    return std::tuple{m[i][i], row, col};
  };
  std::vector<decltype(signature(x.matrix, 0))> sx, sy;
  for (std::size_t i = 0; i < n; ++i) {
    sx.push_back(signature(x.matrix, i));
    sy.push_back(signature(y.matrix, i));
  }
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sx[i] != sy[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p)
        ok = x.matrix[i][p] == y.matrix[j][map[p]] && x.matrix[p][i] == y.matrix[map[p]][j];
      if (!ok) continue;
      used[j] = true;
      map[i] = j;
      if (assign(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return assign(0);
}

} // namespace tal
