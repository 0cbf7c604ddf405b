#include "tal/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tal/error.hpp"
#include "tal/simd/exchange_kernels.hpp"

namespace tal {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second)
      throw InvariantViolation("duplicate vertex label '" + vertices_[i] + "'");
  }
  std::set<std::pair<std::size_t, std::size_t>> directed;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (!arrow_index_.emplace(arr.id, a).second)
      throw InvariantViolation("duplicate arrow id '" + arr.id + "'");
    auto from = index_.find(arr.from);
    auto to = index_.find(arr.to);
    if (from == index_.end() || to == index_.end())
      throw InvariantViolation("arrow '" + arr.id + "' has an undeclared endpoint");
    if (from->second == to->second)
      throw InvariantViolation("loop: arrow '" + arr.id + "' at vertex '" + arr.from + "'");
    directed.emplace(from->second, to->second);
  }
  for (auto [i, j] : directed) {
    if (directed.contains({j, i}))
      throw InvariantViolation("oriented 2-cycle between '" + vertices_[i] + "' and '" +
                               vertices_[j] + "'");
  }
}

std::size_t Quiver::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownVertex("unknown vertex '" + label + "'");
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

const Arrow& Quiver::arrow(const std::string& id) const {
  auto idx = find_arrow(id);
  if (!idx) throw InvariantViolation("unknown arrow id '" + id + "'");
  return arrows_[*idx];
}

std::vector<std::string> Quiver::out_arrows(const std::string& label) const {
  std::vector<std::string> out;
  for (const auto& a : arrows_)
    if (a.from == label) out.push_back(a.id);
  return out;
}

std::vector<std::string> Quiver::in_arrows(const std::string& label) const {
  std::vector<std::string> in;
  for (const auto& a : arrows_)
    if (a.to == label) in.push_back(a.id);
  return in;
}

std::size_t Quiver::degree(const std::string& label) const {
  return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
    return a.from == label || a.to == label;
  }));
}

int Quiver::multiplicity(const std::string& from, const std::string& to) const {
  int m = 0;
  for (const auto& a : arrows_) {
    if (a.from == from && a.to == to) ++m;
    if (a.from == to && a.to == from) --m;
  }
  return m;
}

ExchangeMatrix Quiver::exchange_matrix() const {
  ExchangeMatrix b(vertices_.size());
  for (const auto& a : arrows_) {
    auto i = index_.at(a.from);
    auto j = index_.at(a.to);
    ++b(i, j);
    --b(j, i);
  }
  return b;
}

Quiver Quiver::from_exchange_matrix(std::vector<std::string> vertices, const ExchangeMatrix& b) {
  if (vertices.size() != b.size())
    throw InvariantViolation("label count does not match exchange matrix size");
  if (!b.is_skew_symmetric()) throw InvariantViolation("exchange matrix is not skew-symmetric");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::int32_t k = 0; k < b(i, j); ++k) {
        arrows.push_back({"a" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k),
                          vertices[i], vertices[j]});
      }
    }
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver Quiver::induced(std::span<const std::string> keep) const {
  std::set<std::string> wanted(keep.begin(), keep.end());
  std::vector<std::string> verts;
  for (const auto& v : vertices_)
    if (wanted.contains(v)) verts.push_back(v);
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_)
    if (wanted.contains(a.from) && wanted.contains(a.to)) arrows.push_back(a);
  return Quiver(std::move(verts), std::move(arrows));
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  auto key = [](const Arrow& x) { return std::tie(x.id, x.from, x.to); };
  auto sorted = [&](std::vector<Arrow> v) {
    std::sort(v.begin(), v.end(), [&](const Arrow& l, const Arrow& r) { return key(l) < key(r); });
    return v;
  };
  return sorted(a.arrows_) == sorted(b.arrows_);
}

bool ExchangeMatrix::is_skew_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

ExchangeMatrix ExchangeMatrix::permuted(std::span<const std::size_t> order) const {
  ExchangeMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(order[i], order[j]);
  return out;
}

namespace {

std::string fresh_id(std::set<std::string>& taken, std::size_t& counter) {
  for (;; ++counter) {
    std::string id = "c" + std::to_string(counter);
    if (taken.insert(id).second) {
      ++counter;
      return id;
    }
  }
}

} // namespace

Quiver mutate(const Quiver& q, const std::string& k) {
  if (!q.has_vertex(k)) throw UnknownVertex("cannot mutate at unknown vertex '" + k + "'");

  // Arrows i -> k and k -> j, counted with multiplicity.
  std::map<std::string, int> into_k;
  std::map<std::string, int> out_of_k;
  for (const auto& a : q.arrows()) {
    if (a.to == k) ++into_k[a.from];
    if (a.from == k) ++out_of_k[a.to];
  }

  std::set<std::string> taken;
  for (const auto& a : q.arrows()) taken.insert(a.id);

  // Net change per ordered vertex pair (j -> i) from composition through k.
  std::map<std::pair<std::string, std::string>, int> delta;
  for (const auto& [i, r] : into_k)
    for (const auto& [j, s] : out_of_k) delta[{i, j}] += r * s;

  std::vector<Arrow> result;
  std::set<std::pair<std::string, std::string>> touched;
  for (const auto& [pair, add] : delta) touched.insert(pair);

  // Untouched arrows: reverse those at k, keep the rest.
  std::map<std::pair<std::string, std::string>, std::vector<const Arrow*>> between;
  for (const auto& a : q.arrows()) {
    if (a.from == k || a.to == k) {
      std::string id = a.id + "'";
      while (!taken.insert(id).second) id += "'";
      result.push_back({std::move(id), a.to, a.from});
      continue;
    }
    auto fwd = std::make_pair(a.from, a.to);
    auto bwd = std::make_pair(a.to, a.from);
    if (touched.contains(fwd) || touched.contains(bwd)) {
      between[touched.contains(fwd) ? fwd : bwd].push_back(&a);
      continue;
    }
    result.push_back(a);
  }

  std::size_t counter = 0;
  for (const auto& [pair, add] : delta) {
    const auto& [i, j] = pair;
    auto& existing = between[pair];
    std::sort(existing.begin(), existing.end(),
              [](const Arrow* l, const Arrow* r) { return l->id < r->id; });
    // Signed count i -> j before mutation; composition adds i -> j arrows.
    int before = 0;
    for (const Arrow* a : existing) before += (a->from == i) ? 1 : -1;
    int after = before + add;
    bool same_sign = (before > 0 && after > 0) || (before < 0 && after < 0);
    if (same_sign) {
      int keep = std::min(std::abs(before), std::abs(after));
      int drop = static_cast<int>(existing.size()) - keep;
      for (std::size_t x = static_cast<std::size_t>(drop); x < existing.size(); ++x)
        result.push_back(*existing[x]);
      for (int x = keep; x < std::abs(after); ++x) {
        auto id = fresh_id(taken, counter);
        result.push_back(after > 0 ? Arrow{id, i, j} : Arrow{id, j, i});
      }
    } else {
      for (int x = 0; x < std::abs(after); ++x) {
        auto id = fresh_id(taken, counter);
        result.push_back(after > 0 ? Arrow{id, i, j} : Arrow{id, j, i});
      }
    }
  }
  return Quiver(q.vertices(), std::move(result));
}

ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k) {
  ExchangeMatrix out = b;
  simd::mutate_in_place(out, k);
  return out;
}

Quiver renormalized(const Quiver& q) {
  return Quiver::from_exchange_matrix(q.vertices(), q.exchange_matrix());
}

Quiver relabel(const Quiver& q, std::span<const std::string> mapping) {
  if (mapping.size() != q.vertex_count())
    throw InvariantViolation("relabel mapping has wrong size");
  std::unordered_map<std::string, std::string> rename;
  for (std::size_t i = 0; i < mapping.size(); ++i) rename[q.vertices()[i]] = mapping[i];
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.id, rename.at(a.from), rename.at(a.to)});
  return Quiver(std::vector<std::string>(mapping.begin(), mapping.end()), std::move(arrows));
}

} // namespace tal
