#include <string>

#include "tal/error.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

std::string_view to_string(StepTag tag) noexcept {
  switch (tag) {
  case StepTag::S1: return "S1";
  case StepTag::S2: return "S2";
  case StepTag::S3: return "S3";
  case StepTag::S4: return "S4";
  case StepTag::S5: return "S5";
  }
  return "?";
}

// Forward arrows a1..ar run c0 -> c1 -> ... -> cr; the last r2 of them carry
// apexes u_i. Backward arrows b1..bs run from c_{r+j} down to c_{r+j-1} (bs
// closes the cycle at c0); the first s2 carry apexes w_j. The 3-cycles all
// sit next to the sink c_r.
Quiver build_normal_form(const Parameters& p) {
  if (p.r1 < 0 || p.r2 < 0 || p.s1 < 0 || p.s2 < 0)
    throw InvalidParameters("parameters must be non-negative");
  if (p.r() == 0 || p.s() == 0)
    throw InvalidParameters("both r1+r2 and s1+s2 must be positive");
  const int r = p.r();
  const int len = p.r() + p.s();
  auto c = [&](int i) { return "c" + std::to_string(((i % len) + len) % len); };

  std::vector<std::string> vertices;
  for (int i = 0; i < len; ++i) vertices.push_back(c(i));
  for (int i = p.r1 + 1; i <= r; ++i) vertices.push_back("u" + std::to_string(i));
  for (int j = 1; j <= p.s2; ++j) vertices.push_back("w" + std::to_string(j));

  std::vector<Arrow> arrows;
  for (int i = 1; i <= r; ++i) {
    auto n = std::to_string(i);
    arrows.push_back({"a" + n, c(i - 1), c(i)});
    if (i > p.r1) {
      arrows.push_back({"ua" + n, c(i), "u" + n});
      arrows.push_back({"ub" + n, "u" + n, c(i - 1)});
    }
  }
  for (int j = 1; j <= p.s(); ++j) {
    auto n = std::to_string(j);
    arrows.push_back({"b" + n, c(r + j), c(r + j - 1)});
    if (j <= p.s2) {
      arrows.push_back({"wa" + n, c(r + j - 1), "w" + n});
      arrows.push_back({"wb" + n, "w" + n, c(r + j)});
    }
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver build_cycle(int forward, int backward) {
  return build_normal_form({forward, 0, backward, 0});
}

} // namespace tal
