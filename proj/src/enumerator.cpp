#include "tal/enumerator.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "tal/canonical.hpp"
#include "tal/error.hpp"

namespace tal {

namespace {

struct Candidate {
  std::string form;
  ExchangeMatrix matrix;
};

std::vector<Candidate> expand(const ExchangeMatrix& b) {
  std::vector<Candidate> out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto m = mutate(b, k);
    auto lab = canonical_labeling(m);
    out.push_back({std::move(lab.form), m.permuted(lab.order)});
  }
  return out;
}

std::string describe(const Quiver& q) {
  std::string s = "vertices:";
  for (const auto& v : q.vertices()) s += " " + v;
  s += "; arrows:";
  for (const auto& a : q.arrows()) s += " " + a.from + "->" + a.to;
  return s;
}

} // namespace

ClassCensus enumerate_class(const Quiver& seed, std::size_t cap, unsigned workers) {
  workers = std::max(1u, workers);
  std::unordered_set<std::string> visited;
  std::vector<std::pair<std::string, ExchangeMatrix>> found;

  auto start = canonical_labeling(seed.exchange_matrix());
  visited.insert(start.form);
  found.emplace_back(start.form, seed.exchange_matrix().permuted(start.order));
  std::vector<ExchangeMatrix> frontier{found.back().second};

  while (!frontier.empty()) {
    std::vector<std::vector<Candidate>> produced(frontier.size());
    if (workers == 1 || frontier.size() < 2) {
      for (std::size_t i = 0; i < frontier.size(); ++i) produced[i] = expand(frontier[i]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < frontier.size(); i += workers) produced[i] = expand(frontier[i]);
        });
      for (auto& t : pool) t.join();
    }
    // Merge in frontier order so the outcome is scheduling-independent.
    std::vector<ExchangeMatrix> next;
    for (auto& batch : produced)
      for (auto& c : batch) {
        if (!visited.insert(c.form).second) continue;
        if (visited.size() > cap)
          throw CapExceeded("mutation class has more than " + std::to_string(cap) + " members");
        found.emplace_back(c.form, c.matrix);
        next.push_back(std::move(c.matrix));
      }
    frontier = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  ClassCensus census;
  census.seed = seed;
  for (auto& [form, matrix] : found) {
    census.forms.push_back(form);
    census.members.push_back(Quiver::from_exchange_matrix(seed.vertices(), matrix));
    std::optional<Parameters> p;
    try {
      p = compute_parameters(census.members.back());
    } catch (const NotInClass&) {
    }
    if (p) {
      ++census.by_parameters[*p];
      ++census.by_rs[std::minmax(p->r_bar(), p->s_bar())];
    }
    census.params.push_back(p);
  }
  return census;
}

TheoremReport verify_theorems(int n_plus_1, int limit, unsigned workers) {
  if (n_plus_1 < 2 || n_plus_1 > limit)
    throw InvalidParameters("n+1 must lie in [2, " + std::to_string(limit) + "]");
  TheoremReport report{n_plus_1, {}};
  std::map<std::string, int> owner;  // canonical form -> r of the class it came from

  for (int r = 1; 2 * r <= n_plus_1; ++r) {
    const int s = n_plus_1 - r;
    auto census = enumerate_class(build_cycle(r, s), kDefaultEnumerationCap, workers);
    ClassSummary summary{r, s, census.size(), {}};
    std::map<AGInvariant, Parameters> by_phi;

    for (std::size_t i = 0; i < census.size(); ++i) {
      const auto& q = census.members[i];
      auto fail = [&](const std::string& why) { throw AssertionFailure(why + " — counterexample " + describe(q)); };
      if (auto [it, fresh] = owner.emplace(census.forms[i], r); !fresh)
        fail("classes of {" + std::to_string(it->second) + "," + std::to_string(n_plus_1 - it->second) +
             "} and {" + std::to_string(r) + "," + std::to_string(s) + "} intersect");
      if (!census.params[i]) fail("member not recognised");
      const auto& p = *census.params[i];
      if (p.vertex_count() != n_plus_1) fail("parameter identity fails");
      if (std::minmax(p.r_bar(), p.s_bar()) != std::minmax(r, s)) fail("{r_bar, s_bar} differs from the seed");
      auto f = phi(cluster_tilted(q));
      auto [st, fresh_p] = summary.strata.emplace(p, f);
      if (!fresh_p && st->second != f) fail("phi differs inside one parameter stratum");
      auto [ph, fresh_f] = by_phi.emplace(f, p);
      if (!fresh_f && ph->second != p) fail("phi coincides on two parameter strata");
    }
    report.classes.push_back(std::move(summary));
  }
  return report;
}

} // namespace tal
