#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tal/gentle.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

struct SignAssignment {
  std::map<std::string, int> sigma;
  std::map<std::string, int> epsilon;
};

/// Deterministic: arrows in id order, sigma before epsilon, each new
/// constraint component seeded with +1. Throws ConflictingConstraints.
SignAssignment assign_signs(const GentleAlgebra& a);
/// Same constraints, each component's seed sign drawn from `rng`.
SignAssignment assign_signs(const GentleAlgebra& a, std::mt19937_64& rng);

/// Empty when `s` satisfies the three sign conditions.
std::vector<std::string> sign_violations(const GentleAlgebra& a, const SignAssignment& s);

struct Thread {
  enum class Kind { Permitted, Forbidden };
  Kind kind;
  std::vector<std::string> arrows;  // traversal order; empty for trivial threads
  std::string anchor;               // vertex of a trivial thread
  std::string source;
  std::string target;
  int sigma = 1;
  int epsilon = 1;

  bool trivial() const { return arrows.empty(); }
};

std::vector<Thread> threads(const GentleAlgebra& a, const SignAssignment& signs);

/// phi as (n, m) -> count, sorted.
using AGInvariant = std::map<std::pair<int, int>, int>;

AGInvariant phi(const GentleAlgebra& a);
AGInvariant phi_with_signs(const GentleAlgebra& a, const SignAssignment& signs);

struct DerivedDecision {
  bool derived_equivalent = false;
  Parameters params_a, params_b;
  AGInvariant phi_a, phi_b;
  /// (parameters equal) == (phi equal)
  bool consistent = false;
};

DerivedDecision derived_equivalent(const Quiver& a, const Quiver& b);

} // namespace tal
