#include "tal/json_io.hpp"

#include <algorithm>
#include <set>

#include "tal/error.hpp"

namespace tal {

namespace {

void expect_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) throw ParseError(where + ": unexpected field '" + k + "'");
  for (const char* k : keys)
    if (!j.contains(k)) throw ParseError(where + ": missing field '" + k + "'");
}

const std::string& expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get_ref<const std::string&>();
}

int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

} // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

Quiver quiver_from_json(const Json& j, const std::string& where) {
  expect_keys(j, where, {"vertices", "arrows"});
  if (!j["vertices"].is_array()) throw ParseError(where + ".vertices: expected an array");
  if (!j["arrows"].is_array()) throw ParseError(where + ".arrows: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i)
    vertices.push_back(expect_string(j["vertices"][i], where + ".vertices[" + std::to_string(i) + "]"));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < j["arrows"].size(); ++i) {
    auto at = where + ".arrows[" + std::to_string(i) + "]";
    const auto& a = j["arrows"][i];
    expect_keys(a, at, {"id", "from", "to"});
    arrows.push_back({expect_string(a["id"], at + ".id"), expect_string(a["from"], at + ".from"),
                      expect_string(a["to"], at + ".to")});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver read_quiver(std::string_view text) { return quiver_from_json(parse_json(text)); }

Json quiver_to_json(const Quiver& q) {
  std::vector<Arrow> arrows = q.arrows();
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& l, const Arrow& r) {
    return std::tie(l.from, l.to, l.id) < std::tie(r.from, r.to, r.id);
  });
  Json out;
  out["vertices"] = q.vertices();
  out["arrows"] = Json::array();
  for (const auto& a : arrows) out["arrows"].push_back(Json{{"id", a.id}, {"from", a.from}, {"to", a.to}});
  return out;
}

std::string write_quiver(const Quiver& q) { return quiver_to_json(q).dump(); }

Json params_to_json(const Parameters& p) {
  return Json{{"r1", p.r1}, {"r2", p.r2}, {"s1", p.s1}, {"s2", p.s2}, {"r_bar", p.r_bar()}, {"s_bar", p.s_bar()}};
}

Parameters params_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  Parameters p;
  for (auto [key, field] : {std::pair{"r1", &p.r1}, {"r2", &p.r2}, {"s1", &p.s1}, {"s2", &p.s2}}) {
    if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    *field = expect_int(j[key], where + "." + key);
  }
  return p;
}

Json trace_to_json(const MutationTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(Json{{"vertex", s.vertex}, {"tag", std::string(to_string(s.tag))}});
  return Json{{"steps", steps}};
}

Json relations_to_json(const GentleAlgebra& a) {
  Json rel = Json::array();
  for (const auto& [x, y] : a.relations) rel.push_back(Json::array({x, y}));
  return Json{{"relations", rel}};
}

GentleAlgebra relations_from_json(const Quiver& q, const Json& j) {
  expect_keys(j, "$", {"relations"});
  if (!j["relations"].is_array()) throw ParseError("$.relations: expected an array");
  GentleAlgebra a{q, {}};
  for (std::size_t i = 0; i < j["relations"].size(); ++i) {
    auto at = "$.relations[" + std::to_string(i) + "]";
    const auto& r = j["relations"][i];
    if (!r.is_array() || r.size() != 2) throw ParseError(at + ": expected a pair of arrow ids");
    a.relations.emplace_back(expect_string(r[0], at + "[0]"), expect_string(r[1], at + "[1]"));
  }
  return a;
}

Json cartan_to_json(const CartanMatrix& c) { return Json{{"order", c.order}, {"matrix", c.matrix}}; }

Json phi_to_json(const AGInvariant& phi) {
  Json pairs = Json::array();
  for (const auto& [nm, count] : phi) pairs.push_back(Json{{"n", nm.first}, {"m", nm.second}, {"count", count}});
  return Json{{"pairs", pairs}};
}

Json decision_to_json(const DerivedDecision& d) {
  return Json{{"derived_equivalent", d.derived_equivalent},
              {"params_a", params_to_json(d.params_a)},
              {"params_b", params_to_json(d.params_b)},
              {"phi_a", phi_to_json(d.phi_a)},
              {"phi_b", phi_to_json(d.phi_b)},
              {"consistent", d.consistent}};
}

Json census_to_json(const ClassCensus& c) {
  Json by_params = Json::array();
  for (const auto& [p, n] : c.by_parameters) by_params.push_back(Json{{"params", params_to_json(p)}, {"count", n}});
  Json by_rs = Json::array();
  for (const auto& [rs, n] : c.by_rs) by_rs.push_back(Json{{"r_bar", rs.first}, {"s_bar", rs.second}, {"count", n}});
  return Json{{"size", c.size()}, {"by_parameters", by_params}, {"by_rs", by_rs}};
}

Json error_to_json(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}};
}

} // namespace tal
