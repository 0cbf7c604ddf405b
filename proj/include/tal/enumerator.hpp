#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tal/ag_invariant.hpp"
#include "tal/quiver.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct ClassCensus {
  Quiver seed;
  /// Canonical forms of all members, sorted.
  std::vector<std::string> forms;
  /// Members in canonical vertex order, parallel to `forms`; labels taken
  /// from the seed.
  std::vector<Quiver> members;
  /// Parameters per member; empty when the member is not in the class.
  std::vector<std::optional<Parameters>> params;
  std::map<Parameters, std::size_t> by_parameters;
  /// (r_bar, s_bar) with r_bar <= s_bar -> member count.
  std::map<std::pair<int, int>, std::size_t> by_rs;

  std::size_t size() const noexcept { return forms.size(); }
};

/// BFS over all mutations, deduplicated by canonical form. `workers` > 1
/// expands each BFS level in parallel; the result does not depend on it.
/// Throws CapExceeded once more than `cap` members are found.
ClassCensus enumerate_class(const Quiver& seed, std::size_t cap = kDefaultEnumerationCap,
                            unsigned workers = 1);

struct ClassSummary {
  int r = 0;
  int s = 0;
  std::size_t size = 0;
  std::map<Parameters, AGInvariant> strata;
};

struct TheoremReport {
  int n_plus_1 = 0;
  std::vector<ClassSummary> classes;
};

/// Enumerates the classes of every non-oriented cycle on n_plus_1 vertices and
/// checks disjointness, membership, the parameter identity, the {r_bar, s_bar}
/// invariant and that phi separates exactly the parameter strata. Throws
/// AssertionFailure naming a counterexample.
TheoremReport verify_theorems(int n_plus_1, int limit = 8, unsigned workers = 1);

} // namespace tal
