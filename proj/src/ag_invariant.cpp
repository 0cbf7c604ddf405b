#include "tal/ag_invariant.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "tal/error.hpp"

namespace tal {

namespace {

// Variable 2i is sigma of the i-th arrow (by id), 2i+1 its epsilon; every
// constraint says two variables have opposite signs.
struct SignGraph {
  std::vector<std::string> ids;
  std::vector<std::vector<std::size_t>> opposite;
};

SignGraph sign_graph(const GentleAlgebra& a) {
  const auto& q = a.quiver;
  SignGraph g;
  for (const auto& arr : q.arrows()) g.ids.push_back(arr.id);
  std::sort(g.ids.begin(), g.ids.end());
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < g.ids.size(); ++i) pos[g.ids[i]] = i;
  g.opposite.resize(2 * g.ids.size());
  auto link = [&](std::size_t u, std::size_t v) {
    g.opposite[u].push_back(v);
    g.opposite[v].push_back(u);
  };
  for (const auto& v : q.vertices()) {
    auto out = q.out_arrows(v), in = q.in_arrows(v);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) link(2 * pos[out[i]], 2 * pos[out[j]]);
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j) link(2 * pos[in[i]] + 1, 2 * pos[in[j]] + 1);
    for (const auto& beta : in)
      for (const auto& gamma : out)
        if (!a.is_relation(beta, gamma)) link(2 * pos[gamma], 2 * pos[beta] + 1);
  }
  return g;
}

template <typename Seed>
SignAssignment propagate(const GentleAlgebra& a, Seed seed) {
  auto g = sign_graph(a);
  std::vector<int> value(g.opposite.size(), 0);
  for (std::size_t root = 0; root < value.size(); ++root) {
    if (value[root] != 0) continue;
    value[root] = seed();
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : g.opposite[u]) {
        if (value[v] == 0) {
          value[v] = -value[u];
          queue.push_back(v);
        } else if (value[v] == value[u]) {
          const auto& x = g.ids[u / 2];
          const auto& y = g.ids[v / 2];
          throw ConflictingConstraints("sign constraints conflict between arrows '" + x + "' and '" + y + "'");
        }
      }
    }
  }
  SignAssignment s;
  for (std::size_t i = 0; i < g.ids.size(); ++i) {
    s.sigma[g.ids[i]] = value[2 * i];
    s.epsilon[g.ids[i]] = value[2 * i + 1];
  }
  return s;
}

} // namespace

SignAssignment assign_signs(const GentleAlgebra& a) {
  return propagate(a, [] { return 1; });
}

SignAssignment assign_signs(const GentleAlgebra& a, std::mt19937_64& rng) {
  return propagate(a, [&] { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; });
}

std::vector<std::string> sign_violations(const GentleAlgebra& a, const SignAssignment& s) {
  const auto& q = a.quiver;
  std::vector<std::string> out;
  for (const auto& v : q.vertices()) {
    auto o = q.out_arrows(v), in = q.in_arrows(v);
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        if (s.sigma.at(o[i]) != -s.sigma.at(o[j])) out.push_back("sigma(" + o[i] + ") = sigma(" + o[j] + ")");
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j)
        if (s.epsilon.at(in[i]) != -s.epsilon.at(in[j]))
          out.push_back("epsilon(" + in[i] + ") = epsilon(" + in[j] + ")");
    for (const auto& beta : in)
      for (const auto& gamma : o)
        if (!a.is_relation(beta, gamma) && s.sigma.at(gamma) != -s.epsilon.at(beta))
          out.push_back("sigma(" + gamma + ") = epsilon(" + beta + ")");
  }
  return out;
}

namespace {

struct Successors {
  std::map<std::string, std::string> free_next, free_prev, zero_next, zero_prev;
};

Successors successors(const GentleAlgebra& a) {
  const auto& q = a.quiver;
  Successors s;
  for (const auto& alpha : q.arrows()) {
    for (const auto& b : q.out_arrows(alpha.to)) {
      bool zero = a.is_relation(alpha.id, b);
      auto& next = zero ? s.zero_next : s.free_next;
      auto& prev = zero ? s.zero_prev : s.free_prev;
      if (next.contains(alpha.id) || prev.contains(b))
        throw InvariantViolation("algebra is not gentle at arrow '" + alpha.id + "'");
      next[alpha.id] = b;
      prev[b] = alpha.id;
    }
  }
  return s;
}

// Maximal chains along `next`; arrows left over lie on closed chains.
std::vector<std::vector<std::string>> chains(const Quiver& q, const std::map<std::string, std::string>& next,
                                             const std::map<std::string, std::string>& prev,
                                             std::set<std::string>& covered) {
  std::vector<std::vector<std::string>> out;
  for (const auto& arr : q.arrows()) {
    if (prev.contains(arr.id)) continue;
    std::vector<std::string> chain{arr.id};
    for (auto it = next.find(arr.id); it != next.end(); it = next.find(it->second)) chain.push_back(it->second);
    covered.insert(chain.begin(), chain.end());
    out.push_back(std::move(chain));
  }
  return out;
}

// Closed relation cycles, each reported once (by their least arrow id).
std::vector<std::vector<std::string>> relation_cycles(const GentleAlgebra& a, const Successors& s,
                                                      const std::set<std::string>& covered) {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  std::vector<std::string> ids;
  for (const auto& arr : a.quiver.arrows()) ids.push_back(arr.id);
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    if (covered.contains(id) || seen.contains(id)) continue;
    std::vector<std::string> cyc{id};
    seen.insert(id);
    for (auto x = s.zero_next.at(id); x != id; x = s.zero_next.at(x)) {
      cyc.push_back(x);
      seen.insert(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

} // namespace

std::vector<Thread> threads(const GentleAlgebra& a, const SignAssignment& signs) {
  const auto& q = a.quiver;
  auto s = successors(a);
  std::vector<Thread> out;

  std::set<std::string> covered;
  for (auto& chain : chains(q, s.free_next, s.free_prev, covered)) {
    Thread t{Thread::Kind::Permitted, chain, {}, q.arrow(chain.front()).from, q.arrow(chain.back()).to,
             signs.sigma.at(chain.front()), signs.epsilon.at(chain.back())};
    out.push_back(std::move(t));
  }
  if (covered.size() != q.arrow_count())
    throw InfiniteDimensional("a cycle of arrows carries no relation");

  covered.clear();
  for (auto& chain : chains(q, s.zero_next, s.zero_prev, covered)) {
    Thread t{Thread::Kind::Forbidden, chain, {}, q.arrow(chain.front()).from, q.arrow(chain.back()).to,
             signs.sigma.at(chain.front()), signs.epsilon.at(chain.back())};
    out.push_back(std::move(t));
  }

  for (const auto& v : q.vertices()) {
    auto in = q.in_arrows(v), o = q.out_arrows(v);
    if (in.size() > 1 || o.size() > 1) continue;
    std::optional<std::string> beta, gamma;
    if (!in.empty()) beta = in.front();
    if (!o.empty()) gamma = o.front();
    bool both = beta && gamma;
    bool zero = both && a.is_relation(*beta, *gamma);
    if (!both || !zero) {
      int sg = gamma ? -signs.sigma.at(*gamma) : beta ? signs.epsilon.at(*beta) : 1;
      out.push_back({Thread::Kind::Permitted, {}, v, v, v, sg, -sg});
    }
    if (!both || zero) {
      int sg = gamma ? -signs.sigma.at(*gamma) : beta ? -signs.epsilon.at(*beta) : -1;
      int ep = beta ? -signs.epsilon.at(*beta) : gamma ? -signs.sigma.at(*gamma) : 1;
      out.push_back({Thread::Kind::Forbidden, {}, v, v, v, sg, ep});
    }
  }
  return out;
}

AGInvariant phi_with_signs(const GentleAlgebra& a, const SignAssignment& signs) {
  auto all = threads(a, signs);
  std::vector<const Thread*> permitted, forbidden;
  for (const auto& t : all) (t.kind == Thread::Kind::Permitted ? permitted : forbidden).push_back(&t);

  auto unique = [](const std::vector<const Thread*>& pool, auto pred, const char* what) {
    const Thread* hit = nullptr;
    for (const auto* t : pool) {
      if (!pred(*t)) continue;
      if (hit) throw PairingFailure(std::string("two candidate ") + what + " threads");
      hit = t;
    }
    if (!hit) throw PairingFailure(std::string("no candidate ") + what + " thread");
    return hit;
  };

  AGInvariant result;
  std::set<const Thread*> used_p, used_f;
  for (const auto* h0 : permitted) {
    if (used_p.contains(h0)) continue;
    used_p.insert(h0);
    int n = 0, m = 0;
    const Thread* h = h0;
    for (;;) {
      const Thread* pi = unique(
          forbidden, [&](const Thread& f) { return f.target == h->target && f.epsilon == -h->epsilon; },
          "forbidden");
      if (!used_f.insert(pi).second) throw PairingFailure("forbidden thread used twice");
      m += static_cast<int>(pi->arrows.size());
      const Thread* next = unique(
          permitted, [&](const Thread& p) { return p.source == pi->source && p.sigma == -pi->sigma; },
          "permitted");
      ++n;
      if (next == h0) break;
      if (!used_p.insert(next).second) throw PairingFailure("permitted thread used twice");
      h = next;
    }
    ++result[{n, m}];
  }
  if (used_f.size() != forbidden.size()) throw PairingFailure("forbidden threads left unpaired");

  // Every arrow: once in a permitted thread, once in a forbidden thread or a relation cycle.
  auto s = successors(a);
  std::set<std::string> covered;
  std::map<std::string, int> forward, backward;
  for (const auto* t : permitted)
    for (const auto& x : t->arrows) ++forward[x];
  for (const auto* t : forbidden)
    for (const auto& x : t->arrows) {
      ++backward[x];
      covered.insert(x);
    }
  for (const auto& cyc : relation_cycles(a, s, covered)) {
    for (const auto& x : cyc) ++backward[x];
    ++result[{0, static_cast<int>(cyc.size())}];
  }
  for (const auto& arr : a.quiver.arrows())
    if (forward[arr.id] != 1 || backward[arr.id] != 1)
      throw AssertionFailure("arrow '" + arr.id + "' not conserved by the thread walk");
  return result;
}

AGInvariant phi(const GentleAlgebra& a) { return phi_with_signs(a, assign_signs(a)); }

DerivedDecision derived_equivalent(const Quiver& a, const Quiver& b) {
  DerivedDecision d;
  d.params_a = compute_parameters(a);
  d.params_b = compute_parameters(b);
  d.phi_a = phi(cluster_tilted(a));
  d.phi_b = phi(cluster_tilted(b));
  d.derived_equivalent = d.params_a == d.params_b;
  d.consistent = (d.params_a == d.params_b) == (d.phi_a == d.phi_b);
  return d;
}

} // namespace tal
