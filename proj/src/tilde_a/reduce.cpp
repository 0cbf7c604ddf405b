#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "tal/canonical.hpp"
#include "tal/error.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

namespace {

class Reducer {
public:
  explicit Reducer(const Quiver& q)
      : cur_(q), params_(compute_parameters(q)),
        guard_(10 * (q.vertex_count() + 1) * (q.vertex_count() + 1)) {}

  Reduction run() {
    phase_a();
    phase_b();
    if (!is_isomorphic(cur_, build_normal_form(params_)))
      throw AssertionFailure("reduction did not reach the normal form");
    return {std::move(trace_), std::move(cur_)};
  }

private:
  void apply(const std::string& v, StepTag tag) {
    if (trace_.steps.size() >= guard_)
      throw NonTermination("reduction exceeded " + std::to_string(guard_) + " steps");
    cur_ = mutate(cur_, v);
    Parameters now;
    try {
      now = compute_parameters(cur_);
    } catch (const NotInClass& e) {
      throw AssertionFailure("mutation at '" + v + "' left the class: " + e.what());
    }
    if (now != params_)
      throw AssertionFailure("parameters changed after mutating at '" + v + "'");
    trace_.steps.push_back({v, tag, now});
  }

  // Slide the 3-cycle that is nearest to its apex (but not touching it) one
  // bridge closer; returns false when every branch 3-cycle touches its apex.
  bool try_slide(const TildeADecomposition& d) {
    std::optional<std::pair<int, std::string>> best;
    for (const auto& [alpha, branch] : d.branches) {
      const auto& z = d.attached.at(alpha);
      const auto& tris = d.branch_triangles.at(alpha);
      std::set<std::string> tri_arrows;
      for (const auto& t : tris) tri_arrows.insert(t.begin(), t.end());

      // 0-1 BFS: 3-cycle edges cost nothing, bridges cost one.
      std::map<std::string, int> dist;
      for (const auto& v : branch.vertices()) dist[v] = std::numeric_limits<int>::max();
      std::deque<std::string> queue{z};
      dist[z] = 0;
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (const auto& a : branch.arrows()) {
          if (a.from != x && a.to != x) continue;
          const auto& y = a.from == x ? a.to : a.from;
          int w = tri_arrows.contains(a.id) ? 0 : 1;
          if (dist[x] + w < dist[y]) {
            dist[y] = dist[x] + w;
            if (w == 0) queue.push_front(y);
            else queue.push_back(y);
          }
        }
      }

      for (const auto& t : tris) {
        for (const auto& id : t) {
          const auto& a = branch.arrow(id).from;
          if (dist[a] == 0) continue;
          for (const auto& b : branch.arrows()) {
            if (tri_arrows.contains(b.id) || (b.from != a && b.to != a)) continue;
            const auto& other = b.from == a ? b.to : b.from;
            if (dist[other] == dist[a] - 1 && (!best || dist[a] < best->first))
              best = std::pair{dist[a], a};
          }
        }
      }
    }
    if (!best) return false;
    apply(best->second, StepTag::S1);
    return true;
  }

  void phase_a() {
    for (;;) {
      auto d = decompose(cur_);
      if (try_slide(d)) continue;
      std::optional<std::pair<std::string, StepTag>> move;
      for (const auto& [alpha, branch] : d.branches) {
        const auto& z = d.attached.at(alpha);
        auto deg = branch.degree(z);
        if (deg == 2 && (!move || move->second != StepTag::S2)) move = std::pair{z, StepTag::S2};
        if (deg == 1 && !move) move = std::pair{z, StepTag::S3};
      }
      if (!move) return;
      apply(move->first, move->second);
    }
  }

  struct Token {
    bool forward;
    bool tri;
    friend bool operator==(const Token&, const Token&) = default;
  };

  std::vector<Token> read_tokens(const std::vector<std::string>& cyc) const {
    std::set<std::string> on_cycle(cyc.begin(), cyc.end());
    std::vector<Token> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& u = cyc[i];
      const auto& v = cyc[(i + 1) % cyc.size()];
      int m = cur_.multiplicity(u, v);
      if (m != 1 && m != -1) throw AssertionFailure("cycle edge " + u + " - " + v + " is not a single arrow");
      const auto& from = m > 0 ? u : v;
      const auto& to = m > 0 ? v : u;
      bool tri = false;
      for (const auto& z : cur_.vertices())
        if (!on_cycle.contains(z) && cur_.multiplicity(to, z) == 1 && cur_.multiplicity(z, from) == 1)
          tri = true;
      out.push_back({m > 0, tri});
    }
    return out;
  }

  std::string apex_of(const std::string& from, const std::string& to,
                      const std::set<std::string>& on_cycle) const {
    for (const auto& z : cur_.vertices())
      if (!on_cycle.contains(z) && cur_.multiplicity(to, z) == 1 && cur_.multiplicity(z, from) == 1)
        return z;
    throw AssertionFailure("no apex on " + from + " -> " + to);
  }

  void phase_b() {
    auto d = decompose(cur_);
    for (const auto& [alpha, branch] : d.branches)
      if (branch.vertex_count() != 1) throw AssertionFailure("branch left after the first phase");
    const auto& cyc = d.cycle;
    const std::size_t len = cyc.size();
    if (len < 3) return;
    std::set<std::string> on_cycle(cyc.begin(), cyc.end());
    auto raw = oriented_parameters(d);

    std::vector<Token> target;
    for (int i = 0; i < raw.r1; ++i) target.push_back({true, false});
    for (int i = 0; i < raw.r2; ++i) target.push_back({true, true});
    for (int i = 0; i < raw.s2; ++i) target.push_back({false, true});
    for (int i = 0; i < raw.s1; ++i) target.push_back({false, false});

    auto tokens = read_tokens(cyc);
    auto kind = [](Token t) { return (t.forward ? 2 : 0) + (t.tri ? 1 : 0); };

    // Pick the rotation of the target needing fewest adjacent swaps.
    std::vector<std::size_t> dest;
    std::size_t best_inv = std::numeric_limits<std::size_t>::max();
    for (std::size_t rot = 0; rot < len; ++rot) {
      std::vector<std::vector<std::size_t>> slots(4);
      for (std::size_t i = 0; i < len; ++i) slots[kind(target[(i + rot) % len])].push_back(i);
      std::vector<std::size_t> used(4, 0), perm(len);
      for (std::size_t i = 0; i < len; ++i) {
        int k = kind(tokens[i]);
        perm[i] = slots[k][used[k]++];
      }
      std::size_t inv = 0;
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) inv += perm[i] > perm[j];
      if (inv < best_inv) {
        best_inv = inv;
        dest = perm;
      }
    }

    for (;;) {
      std::size_t i = 0;
      while (i + 1 < len && dest[i] < dest[i + 1]) ++i;
      if (i + 1 >= len) break;
      Token left = tokens[i], right = tokens[i + 1];
      const auto& v = cyc[i + 1];
      if (left.forward != right.forward) {
        apply(v, left.tri == right.tri ? StepTag::S5 : StepTag::S4);
      } else {
        // Shrink the cycle at v, flip the leaf, re-insert v on the other side.
        bool left_tri = left.tri;
        const auto& p = cyc[i];
        const auto& w = cyc[i + 2 == len ? 0 : i + 2];
        std::string z = left_tri ? (left.forward ? apex_of(p, v, on_cycle) : apex_of(v, p, on_cycle))
                                 : (right.forward ? apex_of(v, w, on_cycle) : apex_of(w, v, on_cycle));
        apply(v, StepTag::S4);
        apply(z, StepTag::S4);
        apply(v, StepTag::S4);
      }
      std::swap(tokens[i], tokens[i + 1]);
      std::swap(dest[i], dest[i + 1]);
      if (read_tokens(cyc) != tokens)
        throw AssertionFailure("unexpected cycle word after swapping at '" + v + "'");
    }
  }

  Quiver cur_;
  Parameters params_;
  std::size_t guard_;
  MutationTrace trace_;
};

} // namespace

Reduction reduce_to_normal_form(const Quiver& q) { return Reducer(q).run(); }

Quiver to_cycle_form(const Quiver& q) {
  Quiver cur = reduce_to_normal_form(q).result;
  auto d = decompose(cur);
  for (const auto& [alpha, z] : d.attached) cur = mutate(cur, z);
  auto after = decompose(cur);
  if (!after.attached.empty()) throw AssertionFailure("3-cycles left after apex mutations");
  return cur;
}

} // namespace tal
