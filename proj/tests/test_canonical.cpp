#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "tal/canonical.hpp"
#include "tal/error.hpp"
#include "tal/tilde_a.hpp"

using namespace tal;

TEST_CASE("small isomorphism examples") {
  Quiver p({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  Quiver rev({"1", "2", "3"}, {{"a", "3", "2"}, {"b", "2", "1"}});
  Quiver tri({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
  CHECK(is_isomorphic(p, rev));
  CHECK_FALSE(is_isomorphic(p, tri));
  Quiver dbl({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}});
  Quiver single({"x", "y"}, {{"a", "x", "y"}});
  CHECK_FALSE(is_isomorphic(dbl, single));
}

TEST_CASE("form is invariant under relabelling and agrees with brute force") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 400; ++i) {
    auto a = oracle::random_quiver(rng, 7, 1);
    auto labels = a.vertices();
    std::shuffle(labels.begin(), labels.end(), rng);
    CHECK(canonical_form(a) == canonical_form(relabel(a, labels)));

    auto b = oracle::random_quiver(rng, 7, 1);
    if (a.vertex_count() == b.vertex_count()) CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
    // same degree data, different structure: one mutation away
    auto m = mutate(a, a.vertices()[0]);
    CHECK(is_isomorphic(a, m) == oracle::isomorphic(a, m));
  }
}

TEST_CASE("regular and symmetric quivers") {
  // cycles and normal forms have large automorphism groups
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= 6; ++s) {
      auto c = build_cycle(r, s);
      auto labels = c.vertices();
      std::reverse(labels.begin(), labels.end());
      CHECK(canonical_form(c) == canonical_form(relabel(c, labels)));
      if (r + s <= 8) CHECK(is_isomorphic(c, build_cycle(s, r)));
    }
  CHECK_FALSE(is_isomorphic(build_cycle(2, 4), build_cycle(3, 3)));
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(canonical_form(build_cycle(40, 40)), SizeLimit);
  CHECK_NOTHROW(canonical_form(build_cycle(40, 40), 100));
}
