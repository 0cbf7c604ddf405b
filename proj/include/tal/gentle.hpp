#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tal/quiver.hpp"

namespace tal {

/// Path algebra modulo length-2 zero relations. A relation (a, b) means the
/// path "a then b" is zero (a.to == b.from); the right-to-left composite
/// notation would write it as ba. Traversal order is used everywhere here.
struct GentleAlgebra {
  Quiver quiver;
  std::vector<std::pair<std::string, std::string>> relations;

  bool is_relation(const std::string& first, const std::string& second) const;
};

/// Relations are the three compositions around every oriented 3-cycle of a
/// quiver in the class; throws NotInClass.
GentleAlgebra cluster_tilted(const Quiver& q);

struct Violation {
  int condition = 0;  // 1..4; 3 covers malformed (non-composable, unknown) relations
  std::string message;
  std::vector<std::string> witnesses;
};

/// Empty iff the algebra is gentle.
std::vector<Violation> validate_gentle(const GentleAlgebra& a);

struct CartanMatrix {
  std::vector<std::string> order;
  /// matrix[i][j]: nonzero paths from order[i] to order[j], trivial included.
  std::vector<std::vector<int>> matrix;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

/// Throws InfiniteDimensional when a nonzero path exceeds 2 * vertex count.
CartanMatrix cartan(const GentleAlgebra& a);

/// Two-term complex replacing the stalk at `pivot` by
/// P_pivot -> (+) P_{s(a)} over arrows a ending at the pivot (Incoming), or
/// the dual construction over arrows leaving it (Outgoing).
struct TwoTermComplexSpec {
  enum class Side { Incoming, Outgoing };
  std::string pivot;
  Side side = Side::Incoming;
};

/// Side used for reduction moves: incoming unless the pivot has more
/// outgoing than incoming arrows (the mirrored configuration).
TwoTermComplexSpec complex_for_pivot(const Quiver& q, const std::string& pivot);

/// Alternating-sum Cartan matrix of the endomorphism algebra of the complex.
CartanMatrix bb_cartan(const GentleAlgebra& a, const TwoTermComplexSpec& spec);

/// True if some simultaneous row/column permutation turns x into y.
bool equal_up_to_permutation(const CartanMatrix& x, const CartanMatrix& y);

} // namespace tal
