#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "tal/canonical.hpp"
#include "tal/enumerator.hpp"
#include "tal/error.hpp"

using namespace tal;

TEST_CASE("double arrow class is a single quiver") {
  auto c = enumerate_class(build_cycle(1, 1));
  CHECK(c.size() == 1);
  CHECK(c.by_rs.at({1, 1}) == 1);
}

TEST_CASE("non-oriented triangle class") {
  auto c = enumerate_class(build_cycle(2, 1));
  CHECK(c.size() > 1);
  for (const auto& p : c.params) CHECK(p.has_value());
  CHECK(c.by_rs.size() == 1);
  CHECK(c.by_rs.begin()->first == std::pair{1, 2});
}

TEST_CASE("classes of different {r, s} are disjoint") {
  auto a = enumerate_class(build_cycle(1, 4));
  auto b = enumerate_class(build_cycle(2, 3));
  std::vector<std::string> both;
  std::set_intersection(a.forms.begin(), a.forms.end(), b.forms.begin(), b.forms.end(), std::back_inserter(both));
  CHECK(both.empty());
}

TEST_CASE("census is closed under mutation") {
  auto c = enumerate_class(build_cycle(2, 3));
  std::set<std::string> forms(c.forms.begin(), c.forms.end());
  for (const auto& q : c.members)
    for (const auto& v : q.vertices()) CHECK(forms.contains(canonical_form(mutate(q, v))));
}

TEST_CASE("worker count does not change the census") {
  auto one = enumerate_class(build_cycle(3, 4), kDefaultEnumerationCap, 1);
  auto four = enumerate_class(build_cycle(3, 4), kDefaultEnumerationCap, 4);
  CHECK(one.forms == four.forms);
  CHECK(one.by_parameters == four.by_parameters);
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(enumerate_class(build_cycle(3, 4), 5), CapExceeded);
  // type A_3 seed: finite class, members are not in the cycle class
  Quiver path({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  auto c = enumerate_class(path);
  for (const auto& p : c.params) CHECK_FALSE(p.has_value());
}

TEST_CASE("theorem checks on small sizes") {
  auto two = verify_theorems(2);
  REQUIRE(two.classes.size() == 1);
  CHECK(two.classes[0].size == 1);
  auto four = verify_theorems(4);
  REQUIRE(four.classes.size() == 2);
  CHECK(four.classes[0].r == 1);
  CHECK(four.classes[1].r == 2);
  CHECK_THROWS_AS(verify_theorems(9), InvalidParameters);
}

TEST_CASE("reduction on every member of small classes") {
  for (auto [r, s] : {std::pair{1, 3}, {2, 2}, {2, 3}}) {
    auto c = enumerate_class(build_cycle(r, s));
    for (const auto& q : c.members) {
      auto red = reduce_to_normal_form(q);
      CHECK(is_isomorphic(red.result, build_normal_form(compute_parameters(q))));
    }
  }
}

TEST_CASE("algebras of the whole corpus are gentle with small Cartan entries") {
  for (int n1 = 2; n1 <= 8; ++n1)
    for (int r = 1; 2 * r <= n1; ++r) {
      auto c = enumerate_class(build_cycle(r, n1 - r));
      for (const auto& q : c.members) {
        auto a = cluster_tilted(q);
        CHECK(validate_gentle(a).empty());
        for (const auto& row : cartan(a).matrix)
          for (int x : row) CHECK((x >= 0 && x <= 2));
        CHECK_NOTHROW(phi(a));
      }
    }
}

TEST_CASE("recognition agrees with the BFS corpus on perturbed quivers") {
  std::map<std::size_t, std::set<std::string>> corpus;
  std::vector<Quiver> members;
  for (int n1 = 2; n1 <= 7; ++n1)
    for (int r = 1; 2 * r <= n1; ++r) {
      auto c = enumerate_class(build_cycle(r, n1 - r));
      corpus[static_cast<std::size_t>(n1)].insert(c.forms.begin(), c.forms.end());
      members.insert(members.end(), c.members.begin(), c.members.end());
    }
  std::mt19937_64 rng(12);
  int accepted = 0, rejected = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto& q = members[rng() % members.size()];
    auto b = q.exchange_matrix();
    std::size_t x = rng() % b.size(), y = rng() % b.size();
    if (x == y) continue;
    int delta = (rng() % 2) ? 1 : -1;
    b(x, y) += delta;
    b(y, x) -= delta;
    auto p = Quiver::from_exchange_matrix(q.vertices(), b);
    bool in_corpus = corpus[p.vertex_count()].contains(canonical_form(p));
    bool recognised = true;
    try {
      decompose(p);
    } catch (const NotInClass&) {
      recognised = false;
    }
    CHECK(recognised == in_corpus);
    (recognised ? accepted : rejected)++;
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}
