#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tal/error.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

std::string_view to_string(NotInClassReason reason) noexcept {
  switch (reason) {
  case NotInClassReason::NoNonOrientedCycle: return "NoNonOrientedCycle";
  case NotInClassReason::MultipleNonOrientedCycles: return "MultipleNonOrientedCycles";
  case NotInClassReason::BadCycleIncidence: return "BadCycleIncidence";
  case NotInClassReason::BranchNotTypeA: return "BranchNotTypeA";
  case NotInClassReason::BadApexDegree: return "BadApexDegree";
  }
  return "Unknown";
}

Parameters Parameters::canonical() const noexcept {
  Parameters s = swapped();
  return s < *this ? s : *this;
}

namespace {

// Underlying multigraph: per vertex index, (neighbour index, arrow index).
struct Underlying {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;

  explicit Underlying(const Quiver& q) : adj(q.vertex_count()) {
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      auto i = q.index_of(q.arrows()[a].from);
      auto j = q.index_of(q.arrows()[a].to);
      adj[i].emplace_back(j, a);
      adj[j].emplace_back(i, a);
    }
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return std::any_of(adj[u].begin(), adj[u].end(), [&](const auto& e) { return e.first == v; });
  }
};

bool connected(const Quiver& q) {
  if (q.vertex_count() == 0) return false;
  Underlying g(q);
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [u, a] : g.adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == q.vertex_count();
}

// Biconnected components as arrow index sets (Hopcroft-Tarjan on edges).
std::vector<std::vector<std::size_t>> blocks(const Quiver& q) {
  Underlying g(q);
  const std::size_t n = q.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<std::vector<std::size_t>> out;
  int time = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_arrow) {
    disc[v] = low[v] = time++;
    for (auto [u, a] : g.adj[v]) {
      if (a == parent_arrow) continue;
      if (disc[u] == -1) {
        edge_stack.push_back(a);
        dfs(u, a);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<std::size_t> block;
          for (;;) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == a) break;
          }
          out.push_back(std::move(block));
        }
      } else if (disc[u] < disc[v]) {
        edge_stack.push_back(a);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, static_cast<std::size_t>(-1));
  return out;
}

bool is_oriented_triangle(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.size() != 3) return false;
  std::map<std::string, int> outdeg, indeg;
  for (auto a : arrows) {
    ++outdeg[q.arrows()[a].from];
    ++indeg[q.arrows()[a].to];
  }
  if (outdeg.size() != 3 || indeg.size() != 3) return false;
  return std::all_of(outdeg.begin(), outdeg.end(), [&](const auto& kv) { return indeg[kv.first] == 1; });
}

// Rotates the triangle so that it starts with `first` (or its least id).
Triangle make_triangle(const Quiver& q, std::vector<std::string> ids, const std::string& first = {}) {
  std::string start = first.empty() ? *std::min_element(ids.begin(), ids.end()) : first;
  Triangle t;
  t[0] = start;
  for (std::size_t k = 1; k < 3; ++k) {
    const auto& prev = q.arrow(t[k - 1]);
    for (const auto& id : ids)
      if (q.arrow(id).from == prev.to) t[k] = id;
  }
  return t;
}

std::vector<Triangle> triangles_of_type_a(const Quiver& q) {
  std::vector<Triangle> out;
  for (const auto& block : blocks(q)) {
    if (!is_oriented_triangle(q, block)) continue;
    std::vector<std::string> ids;
    for (auto a : block) ids.push_back(q.arrows()[a].id);
    out.push_back(make_triangle(q, ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ChordlessCycle {
  std::vector<std::size_t> vertices;
  bool oriented = false;
};

// Chordless cycles of length >= 3 in the underlying simple graph, skipping
// any that use a parallel pair (those are not full subquivers).
std::vector<ChordlessCycle> chordless_cycles(const Quiver& q, std::size_t cap) {
  const std::size_t n = q.vertex_count();
  auto b = q.exchange_matrix();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) != 0) nbr[i].push_back(j);

  std::vector<ChordlessCycle> found;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::size_t budget = 200000 * (n + 1);

  auto record = [&]() {
    const std::size_t len = path.size();
    bool fwd = true, bwd = true, parallel = false;
    for (std::size_t i = 0; i < len; ++i) {
      auto e = b(path[i], path[(i + 1) % len]);
      if (e > 1 || e < -1) parallel = true;
      if (e < 0) fwd = false;
      if (e > 0) bwd = false;
    }
    if (parallel) return;
    found.push_back({path, fwd || bwd});
    if (found.size() > cap)
      throw NotInClass(NotInClassReason::MultipleNonOrientedCycles, "chordless cycle cap exceeded");
  };

  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (budget-- == 0)
      throw NotInClass(NotInClassReason::MultipleNonOrientedCycles, "cycle search budget exhausted");
    const std::size_t last = path.back();
    for (std::size_t w : nbr[last]) {
      if (w <= start || on_path[w]) continue;
      // w may only touch the last path vertex and (when closing) the start.
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size(); ++k)
        if (b(path[k], w) != 0) chord = true;
      if (chord) continue;
      path.push_back(w);
      on_path[w] = true;
      if (b(w, start) != 0) {
        if (path.size() >= 3 && path[1] < w) record();
      } else {
        extend(start);
      }
      on_path[w] = false;
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    for (std::size_t w : nbr[s]) {
      if (w <= s) continue;
      path.push_back(w);
      on_path[w] = true;
      extend(s);
      on_path[w] = false;
      path.pop_back();
    }
    on_path[s] = false;
  }
  return found;
}

} // namespace

bool recognize_type_a(const Quiver& q) {
  if (!connected(q)) return false;
  for (const auto& a : q.arrows())
    if (std::abs(q.multiplicity(a.from, a.to)) > 1) return false;
  std::map<std::string, int> triangles_at;
  for (const auto& block : blocks(q)) {
    if (block.size() == 1) continue;
    if (!is_oriented_triangle(q, block)) return false;
    for (auto a : block) ++triangles_at[q.arrows()[a].from];
  }
  for (const auto& v : q.vertices()) {
    auto deg = q.degree(v);
    int t = triangles_at[v];
    if (deg > 4) return false;
    if (deg == 4 && t != 2) return false;
    if (deg == 3 && t != 1) return false;
  }
  return true;
}

TildeADecomposition decompose(const Quiver& q) {
  using R = NotInClassReason;
  const std::size_t n = q.vertex_count();
  auto b = q.exchange_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) > 2)
        throw NotInClass(R::BadCycleIncidence,
                         "more than two arrows " + q.vertices()[i] + " -> " + q.vertices()[j]);

  // Non-oriented chordless cycles: parallel pairs and longer induced cycles.
  std::vector<std::vector<std::size_t>> non_oriented;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) == 2) non_oriented.push_back({std::min(i, j), std::max(i, j)});
  for (auto& c : chordless_cycles(q, 10 * (n + 1)))
    if (!c.oriented) non_oriented.push_back(std::move(c.vertices));

  if (non_oriented.empty()) throw NotInClass(R::NoNonOrientedCycle, "no non-oriented cycle");
  if (non_oriented.size() > 1)
    throw NotInClass(R::MultipleNonOrientedCycles,
                     std::to_string(non_oriented.size()) + " non-oriented cycles");

  TildeADecomposition d;
  const auto& cyc_idx = non_oriented.front();
  const std::size_t len = cyc_idx.size();
  std::vector<std::string> labels;
  for (auto i : cyc_idx) labels.push_back(q.vertices()[i]);
  std::set<std::string> on_cycle(labels.begin(), labels.end());

  // Traversal: least label first, toward its lesser cycle neighbour.
  auto start = static_cast<std::size_t>(std::min_element(labels.begin(), labels.end()) - labels.begin());
  const auto& next = labels[(start + 1) % len];
  const auto& prev = labels[(start + len - 1) % len];
  int step = (len == 2 || next < prev) ? 1 : -1;
  for (std::size_t k = 0; k < len; ++k)
    d.cycle.push_back(labels[(start + len + static_cast<std::size_t>(step) * k) % len]);

  std::set<std::string> cycle_arrow_ids;
  if (len == 2) {
    std::vector<const Arrow*> pair;
    for (const auto& a : q.arrows())
      if (on_cycle.contains(a.from) && on_cycle.contains(a.to)) pair.push_back(&a);
    std::sort(pair.begin(), pair.end(), [](const Arrow* l, const Arrow* r) { return l->id < r->id; });
    d.cycle_arrows.push_back({pair[0]->id, pair[0]->from == d.cycle[0]});
    d.cycle_arrows.push_back({pair[1]->id, pair[1]->from == d.cycle[1]});
  } else {
    for (std::size_t k = 0; k < len; ++k) {
      const auto& u = d.cycle[k];
      const auto& v = d.cycle[(k + 1) % len];
      for (const auto& a : q.arrows()) {
        if (a.from == u && a.to == v) d.cycle_arrows.push_back({a.id, true});
        if (a.from == v && a.to == u) d.cycle_arrows.push_back({a.id, false});
      }
    }
  }
  for (const auto& ca : d.cycle_arrows) cycle_arrow_ids.insert(ca.id);

  // Apexes: z off the cycle with alpha: x -> y, y -> z, z -> x.
  auto find_arrow = [&](const std::string& from, const std::string& to) -> std::string {
    for (const auto& a : q.arrows())
      if (a.from == from && a.to == to) return a.id;
    return {};
  };
  std::set<std::string> apex_arrows;
  std::map<std::string, std::string> apex_owner;
  auto attach = [&](const std::string& alpha, const std::string& z) {
    const auto& arr = q.arrow(alpha);
    auto up = find_arrow(arr.to, z);
    auto down = find_arrow(z, arr.from);
    if (!apex_owner.emplace(z, alpha).second)
      throw NotInClass(R::BadCycleIncidence, "vertex '" + z + "' is apex of two cycle arrows");
    d.attached[alpha] = z;
    d.attached_triangles[alpha] = {alpha, up, down};
    apex_arrows.insert(up);
    apex_arrows.insert(down);
  };
  auto apex_candidates = [&](const Arrow& arr) {
    std::vector<std::string> zs;
    for (const auto& z : q.vertices()) {
      if (on_cycle.contains(z)) continue;
      if (q.multiplicity(arr.to, z) == 1 && q.multiplicity(z, arr.from) == 1) zs.push_back(z);
    }
    return zs;
  };
  if (len == 2) {
    auto zs = apex_candidates(q.arrow(d.cycle_arrows[0].id));
    std::vector<std::string> parallel{d.cycle_arrows[0].id, d.cycle_arrows[1].id};
    std::sort(parallel.begin(), parallel.end());
    if (zs.size() > 2) throw NotInClass(R::BadCycleIncidence, "too many 3-cycles on the double arrow");
    for (std::size_t k = 0; k < zs.size(); ++k) attach(parallel[k], zs[k]);
  } else {
    for (const auto& ca : d.cycle_arrows) {
      auto zs = apex_candidates(q.arrow(ca.id));
      if (zs.size() > 1)
        throw NotInClass(R::BadCycleIncidence, "several 3-cycles on arrow '" + ca.id + "'");
      if (zs.size() == 1) attach(ca.id, zs.front());
    }
  }

  for (const auto& a : q.arrows()) {
    bool touches = on_cycle.contains(a.from) || on_cycle.contains(a.to);
    if (touches && !cycle_arrow_ids.contains(a.id) && !apex_arrows.contains(a.id))
      throw NotInClass(R::BadCycleIncidence, "arrow '" + a.id + "' touches the cycle outside a 3-cycle");
  }

  // Branches: components of the quiver with the cycle removed.
  std::vector<std::string> rest;
  for (const auto& v : q.vertices())
    if (!on_cycle.contains(v)) rest.push_back(v);
  Quiver remainder = q.induced(rest);
  std::map<std::string, std::string> component_of;
  for (const auto& v : remainder.vertices()) {
    if (component_of.contains(v)) continue;
    std::vector<std::string> stack{v};
    component_of[v] = v;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& a : remainder.arrows()) {
        for (const auto& [p, o] : {std::pair{a.from, a.to}, std::pair{a.to, a.from}}) {
          if (p == x && !component_of.contains(o)) {
            component_of[o] = v;
            stack.push_back(o);
          }
        }
      }
    }
  }
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& v : rest) members[component_of[v]].push_back(v);
  std::map<std::string, std::string> apex_of_component;
  for (const auto& [z, alpha] : apex_owner) {
    auto root = component_of[z];
    if (!apex_of_component.emplace(root, z).second)
      throw NotInClass(R::BranchNotTypeA, "two apexes share one branch");
  }
  for (const auto& [root, verts] : members) {
    auto it = apex_of_component.find(root);
    if (it == apex_of_component.end())
      throw NotInClass(R::BranchNotTypeA, "component containing '" + root + "' is not attached to the cycle");
    const auto& z = it->second;
    const auto& alpha = apex_owner[z];
    Quiver branch = remainder.induced(verts);
    if (!recognize_type_a(branch))
      throw NotInClass(R::BranchNotTypeA, "branch at apex '" + z + "' is not of type A");
    auto tris = triangles_of_type_a(branch);
    auto deg = branch.degree(z);
    if (deg > 2) throw NotInClass(R::BadApexDegree, "apex '" + z + "' has degree " + std::to_string(deg));
    if (deg == 2) {
      bool on_triangle = std::any_of(tris.begin(), tris.end(), [&](const Triangle& t) {
        return std::any_of(t.begin(), t.end(), [&](const std::string& id) {
          const auto& a = branch.arrow(id);
          return a.from == z || a.to == z;
        });
      });
      if (!on_triangle)
        throw NotInClass(R::BadApexDegree, "apex '" + z + "' has two branch arrows outside a 3-cycle");
    }
    d.branch_triangles[alpha] = std::move(tris);
    d.branches.emplace(alpha, std::move(branch));
  }
  return d;
}

Parameters oriented_parameters(const TildeADecomposition& d) {
  Parameters p;
  for (const auto& ca : d.cycle_arrows) {
    int& free_count = ca.forward ? p.r1 : p.s1;
    int& tri_count = ca.forward ? p.r2 : p.s2;
    auto it = d.branches.find(ca.id);
    if (it == d.branches.end()) {
      ++free_count;
      continue;
    }
    const auto& tris = d.branch_triangles.at(ca.id);
    ++tri_count;
    free_count += static_cast<int>(it->second.arrow_count() - 3 * tris.size());
    tri_count += static_cast<int>(tris.size());
  }
  return p;
}

Parameters compute_parameters(const Quiver& q) { return oriented_parameters(decompose(q)).canonical(); }

std::vector<Triangle> oriented_triangles(const TildeADecomposition& d) {
  std::vector<Triangle> out;
  for (const auto& ca : d.cycle_arrows) {
    auto it = d.attached_triangles.find(ca.id);
    if (it != d.attached_triangles.end()) out.push_back(it->second);
  }
  for (const auto& ca : d.cycle_arrows) {
    auto it = d.branch_triangles.find(ca.id);
    if (it != d.branch_triangles.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

bool mutation_equivalent(const Quiver& a, const Quiver& b) {
  auto pa = compute_parameters(a);
  auto pb = compute_parameters(b);
  if (a.vertex_count() != b.vertex_count()) return false;
  std::pair ra{std::min(pa.r_bar(), pa.s_bar()), std::max(pa.r_bar(), pa.s_bar())};
  std::pair rb{std::min(pb.r_bar(), pb.s_bar()), std::max(pb.r_bar(), pb.s_bar())};
  return ra == rb;
}

} // namespace tal
