#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tal/quiver.hpp"

namespace tal {

inline constexpr std::size_t kDefaultCanonicalCap = 64;

struct CanonicalLabeling {
  /// order[p] is the original index placed at canonical position p.
  std::vector<std::size_t> order;
  /// Label-independent byte string; equal iff the quivers are isomorphic.
  std::string form;
};

/// Colour refinement followed by individualisation backtracking; the form is
/// the lexicographically least leaf encoding. Throws SizeLimit above `cap`.
CanonicalLabeling canonical_labeling(const ExchangeMatrix& b, std::size_t cap = kDefaultCanonicalCap);

std::string canonical_form(const ExchangeMatrix& b, std::size_t cap = kDefaultCanonicalCap);
std::string canonical_form(const Quiver& q, std::size_t cap = kDefaultCanonicalCap);

bool is_isomorphic(const Quiver& a, const Quiver& b, std::size_t cap = kDefaultCanonicalCap);

} // namespace tal
