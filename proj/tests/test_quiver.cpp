#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "tal/canonical.hpp"
#include "tal/error.hpp"
#include "tal/json_io.hpp"

using namespace tal;

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "1"}}), InvariantViolation);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), InvariantViolation);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "1", "2"}}), InvariantViolation);
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InvariantViolation);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "9"}}), InvariantViolation);
  CHECK_NOTHROW(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}));
}

TEST_CASE("mutation examples") {
  Quiver path({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  auto m = mutate(path, "2");
  CHECK(m.multiplicity("2", "1") == 1);
  CHECK(m.multiplicity("3", "2") == 1);
  CHECK(m.multiplicity("1", "3") == 1);
  CHECK(m.arrow_count() == 3);
  CHECK(m.arrow("a'").from == "2");
  CHECK(m.arrow("c0").from == "1");

  Quiver one({"1", "2"}, {{"a", "1", "2"}});
  auto flipped = mutate(one, "2");
  CHECK(flipped.arrow("a'").from == "2");
  CHECK(flipped.arrow("a'").to == "1");
  CHECK_THROWS_AS(mutate(one, "x"), UnknownVertex);

  // cancellation drops the lowest ids first
  Quiver tri({"1", "2", "3"}, {{"x", "1", "2"}, {"y", "2", "3"}, {"p", "3", "1"}, {"q", "3", "1"}});
  auto t = mutate(tri, "2");
  CHECK(t.multiplicity("3", "1") == 1);
  CHECK(t.find_arrow("q"));
  CHECK_FALSE(t.find_arrow("p"));
}

TEST_CASE("involution and matrix agreement on random quivers") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    auto q = oracle::random_quiver(rng, 9);
    for (const auto& v : q.vertices()) {
      auto once = mutate(q, v);
      CHECK(renormalized(mutate(once, v)) == renormalized(q));
      auto k = q.index_of(v);
      CHECK(oracle::matrix_of(once) == oracle::mutate(oracle::matrix_of(q), k));
      CHECK(once.exchange_matrix() == mutate(q.exchange_matrix(), k));
    }
  }
}

TEST_CASE("sink and source mutation only reverses arrows") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto q = oracle::random_quiver(rng, 8);
    for (const auto& v : q.vertices()) {
      if (!q.in_arrows(v).empty() && !q.out_arrows(v).empty()) continue;
      auto m = mutate(q, v);
      CHECK(m.arrow_count() == q.arrow_count());
      for (const auto& a : q.arrows()) {
        if (a.from == v || a.to == v) {
          CHECK(m.arrow(a.id + "'").from == a.to);
        } else {
          CHECK(m.arrow(a.id) == a);
        }
      }
    }
  }
}

TEST_CASE("exchange matrix round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto q = oracle::random_quiver(rng, 10);
    auto b = q.exchange_matrix();
    CHECK(b.is_skew_symmetric());
    CHECK(Quiver::from_exchange_matrix(q.vertices(), b) == q);
  }
  Quiver dbl({"x", "y"}, {{"p", "x", "y"}, {"q", "x", "y"}});
  auto r = renormalized(dbl);
  CHECK(r.find_arrow("a0_1_0"));
  CHECK(r.find_arrow("a0_1_1"));
}

TEST_CASE("json reader and writer") {
  auto q = read_quiver(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"}]})");
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_count() == 1);
  std::string doc = R"({"vertices":["b","a"],"arrows":[{"id":"z","from":"a","to":"b"},{"id":"y","from":"b","to":"c"}]})";
  CHECK_THROWS_AS(read_quiver(doc), InvariantViolation);
  std::string canonical = R"({"vertices":["b","a","c"],"arrows":[{"id":"z","from":"a","to":"b"},{"id":"y","from":"b","to":"c"}]})";
  CHECK(write_quiver(read_quiver(canonical)) == canonical);
  CHECK_THROWS_AS(read_quiver(R"({"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"1"}]})"), InvariantViolation);
  CHECK_THROWS_AS(read_quiver(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"2","to":"1"}]})"),
                  InvariantViolation);
  CHECK_THROWS_AS(read_quiver(R"({"vertices":["1"]})"), ParseError);
  CHECK_THROWS_AS(read_quiver(R"({"vertices":[1],"arrows":[]})"), ParseError);
  CHECK_THROWS_AS(read_quiver(R"({"vertices":["1"],"arrows":[],"extra":0})"), ParseError);
  CHECK_THROWS_AS(read_quiver("{\"vertices\":["), ParseError);
  try {
    read_quiver(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1"}]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("arrows[0]") != std::string::npos);
  }
}

TEST_CASE("relabel keeps the structure") {
  Quiver path({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  std::vector<std::string> names{"x", "y", "z"};
  auto r = relabel(path, names);
  CHECK(r.arrow("a").from == "x");
  CHECK(is_isomorphic(r, path));
}
