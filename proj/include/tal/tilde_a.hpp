#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tal/quiver.hpp"

namespace tal {

/// An oriented 3-cycle given by its arrows in traversal order: first.to ==
/// second.from, second.to == third.from, third.to == first.from.
using Triangle = std::array<std::string, 3>;

struct CycleArrow {
  std::string id;
  /// True when the arrow points along the traversal c[i] -> c[i+1].
  bool forward = true;
};

/// Structure of a quiver in the mutation class of a non-oriented cycle: the
/// cycle itself, oriented 3-cycles sitting on cycle arrows, and the type-A
/// branch hanging off each apex.
struct TildeADecomposition {
  /// Cycle vertices in traversal order; edge i joins cycle[i] and cycle[i+1 mod L].
  std::vector<std::string> cycle;
  std::vector<CycleArrow> cycle_arrows;
  /// cycle arrow id -> apex vertex of the oriented 3-cycle on that arrow.
  std::map<std::string, std::string> attached;
  /// cycle arrow id -> the 3-cycle (starting with the cycle arrow).
  std::map<std::string, Triangle> attached_triangles;
  /// cycle arrow id -> branch component containing the apex.
  std::map<std::string, Quiver> branches;
  /// Oriented 3-cycles inside branches, keyed by cycle arrow id.
  std::map<std::string, std::vector<Triangle>> branch_triangles;
};

/// Canonical (lexicographically least under r/s exchange) parameter quadruple.
struct Parameters {
  int r1 = 0;
  int r2 = 0;
  int s1 = 0;
  int s2 = 0;

  int r() const noexcept { return r1 + r2; }
  int s() const noexcept { return s1 + s2; }
  int r_bar() const noexcept { return r1 + 2 * r2; }
  int s_bar() const noexcept { return s1 + 2 * s2; }
  int vertex_count() const noexcept { return r1 + s1 + 2 * (r2 + s2); }

  Parameters swapped() const noexcept { return {s1, s2, r1, r2}; }
  Parameters canonical() const noexcept;

  friend auto operator<=>(const Parameters&, const Parameters&) = default;
};

enum class StepTag { S1, S2, S3, S4, S5 };
std::string_view to_string(StepTag tag) noexcept;

struct TraceStep {
  std::string vertex;
  StepTag tag;
  Parameters params;
};

struct MutationTrace {
  std::vector<TraceStep> steps;
};

/// Membership in the mutation class of type A_k (k = vertex count).
bool recognize_type_a(const Quiver& q);

/// Throws NotInClass when q is not in the class.
TildeADecomposition decompose(const Quiver& q);

/// Raw counts along the decomposition's traversal (not canonicalised).
Parameters oriented_parameters(const TildeADecomposition& d);
Parameters compute_parameters(const Quiver& q);

/// Every oriented 3-cycle of a decomposed quiver: cycle-attached ones first.
std::vector<Triangle> oriented_triangles(const TildeADecomposition& d);

/// Deterministic normal-form quiver; vertices c0.., u1.., w1...
Quiver build_normal_form(const Parameters& p);

/// Non-oriented cycle with `forward` arrows one way and `backward` the other,
/// vertices c0..c{n-1}; arrows run c0 -> c1 -> ... -> c{forward} and
/// c0 -> c{n-1} -> ... -> c{forward}.
Quiver build_cycle(int forward, int backward);

struct Reduction {
  MutationTrace trace;
  Quiver result;
};

/// Mutates q to a quiver isomorphic to build_normal_form(compute_parameters(q))
/// while keeping the parameters fixed at every step.
Reduction reduce_to_normal_form(const Quiver& q);

/// Reduces to normal form and then mutates every apex, leaving a
/// non-oriented cycle with r_bar arrows one way and s_bar the other.
Quiver to_cycle_form(const Quiver& q);

bool mutation_equivalent(const Quiver& a, const Quiver& b);

} // namespace tal
