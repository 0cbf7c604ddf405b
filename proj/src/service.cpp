#include "tal/service.hpp"

#include <filesystem>
#include <fstream>

#include "httplib.h"
#include "tal/error.hpp"
#include "tal/log.hpp"

namespace tal {

namespace {

const Json& field(const Json& request, const char* key) {
  if (!request.is_object() || !request.contains(key))
    throw ParseError(std::string("request: missing field '") + key + "'");
  return request[key];
}

int query_int(const std::map<std::string, std::string>& query, const std::string& key) {
  auto it = query.find(key);
  if (it == query.end()) throw ParseError("query: missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("query: parameter '" + key + "' is not an integer");
  }
}

} // namespace

Json analysis_report(const Quiver& q) {
  Json out;
  try {
    decompose(q);
    out["recognized"] = true;
  } catch (const NotInClass& e) {
    out["recognized"] = false;
    out["reason"] = std::string(to_string(e.reason()));
  }
  out["vertices"] = q.vertex_count();
  out["arrows"] = q.arrow_count();
  if (!out["recognized"].get<bool>()) return out;
  auto p = compute_parameters(q);
  auto algebra = cluster_tilted(q);
  out["params"] = params_to_json(p);
  out["r_bar"] = p.r_bar();
  out["s_bar"] = p.s_bar();
  out["phi"] = phi_to_json(phi(algebra));
  out["cartan"] = cartan_to_json(cartan(algebra));
  return out;
}

Json api_mutate(const Json& request) {
  auto q = quiver_from_json(field(request, "quiver"), "$.quiver");
  const auto& v = field(request, "vertex");
  if (!v.is_string()) throw ParseError("$.vertex: expected a string");
  return Json{{"quiver", quiver_to_json(mutate(q, v.get<std::string>()))}};
}

Json api_analyze(const Json& request) {
  return analysis_report(quiver_from_json(field(request, "quiver"), "$.quiver"));
}

Json reduce_output(const Reduction& r) {
  return Json{{"steps", trace_to_json(r.trace)["steps"]}, {"normal_form", quiver_to_json(r.result)}};
}

Json api_reduce(const Json& request) {
  return reduce_output(reduce_to_normal_form(quiver_from_json(field(request, "quiver"), "$.quiver")));
}

Json api_normal_form(const std::map<std::string, std::string>& query) {
  Parameters p{query_int(query, "r1"), query_int(query, "r2"), query_int(query, "s1"), query_int(query, "s2")};
  return Json{{"quiver", quiver_to_json(build_normal_form(p))}};
}

Json api_derived_eq(const Json& request) {
  auto a = quiver_from_json(field(request, "a"), "$.a");
  auto b = quiver_from_json(field(request, "b"), "$.b");
  return decision_to_json(derived_equivalent(a, b));
}

Failure classify(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const NotInClass& x) {
    return {2, 422, x.code(), x.what()};
  } catch (const ParseError& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const InvariantViolation& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const UnknownVertex& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const InvalidParameters& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const SizeLimit& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const CapExceeded& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const InfiniteDimensional& x) {
    return {3, 400, x.code(), x.what()};
  } catch (const Error& x) {
    return {4, 500, x.code(), x.what()};
  } catch (const std::exception& x) {
    return {4, 500, "Internal", x.what()};
  } catch (...) {
    return {4, 500, "Internal", "unknown error"};
  }
}

std::size_t write_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::pair<std::string, Quiver>> fixtures;
  for (auto [r, s] : {std::pair{5, 7}, {1, 1}, {2, 1}, {2, 3}, {4, 4}})
    fixtures.emplace_back("cycle_" + std::to_string(r) + "_" + std::to_string(s), build_cycle(r, s));
  for (Parameters p : {Parameters{2, 3, 3, 4}, {2, 1, 1, 0}, {0, 2, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1},
                       {3, 3, 4, 2}, {1, 1, 1, 1}, {0, 1, 0, 1}, {3, 0, 1, 2}, {2, 2, 2, 0}}) {
    auto name = "nf_" + std::to_string(p.r1) + std::to_string(p.r2) + std::to_string(p.s1) + std::to_string(p.s2);
    fixtures.emplace_back(name, build_normal_form(p));
  }
  // A few members away from normal form, reached by fixed mutation words.
  auto walk = [](Quiver q, std::initializer_list<const char*> word) {
    for (const char* v : word) q = renormalized(mutate(q, v));
    return q;
  };
  fixtures.emplace_back("walk_a", walk(build_cycle(3, 4), {"c1", "c2", "c5", "c1"}));
  fixtures.emplace_back("walk_b", walk(build_normal_form({2, 3, 3, 4}), {"u3", "c3", "w2", "c6", "u4"}));
  fixtures.emplace_back("walk_c", walk(build_cycle(2, 5), {"c3", "c4", "c3", "c0", "c6"}));
  fixtures.emplace_back("walk_d", walk(build_normal_form({1, 1, 2, 1}), {"c1", "u2", "w1"}));
  fixtures.emplace_back("walk_e", walk(build_cycle(6, 2), {"c2", "c3", "c4", "c2", "c7"}));

  auto write = [&](const std::string& name, const Json& j) {
    std::ofstream(fs::path(dir) / name) << dump(j) << '\n';
  };
  for (const auto& [name, q] : fixtures) {
    write(name + ".json", quiver_to_json(q));
    write(name + ".params.json", params_to_json(compute_parameters(q)));
    write(name + ".phi.json", phi_to_json(phi(cluster_tilted(q))));
  }
  return fixtures.size();
}

void install_routes(httplib::Server& server) {
  auto json_post = [&server](const char* path, Json (*handler)(const Json&)) {
    server.Post(path, [handler, path](const httplib::Request& req, httplib::Response& res) {
      try {
        res.set_content(dump(handler(parse_json(req.body))), "application/json");
        log_info(std::string("POST ") + path + " 200");
      } catch (...) {
        auto f = classify(std::current_exception());
        res.status = f.http_status;
        res.set_content(dump(error_to_json(f.code, f.message)), "application/json");
        log_info(std::string("POST ") + path + " " + std::to_string(f.http_status) + ": " + f.message);
      }
    });
  };
  json_post("/api/mutate", api_mutate);
  json_post("/api/analyze", api_analyze);
  json_post("/api/reduce", api_reduce);
  json_post("/api/derived-eq", api_derived_eq);
  server.Get("/api/normal-form", [](const httplib::Request& req, httplib::Response& res) {
    try {
      std::map<std::string, std::string> query(req.params.begin(), req.params.end());
      res.set_content(dump(api_normal_form(query)), "application/json");
    } catch (...) {
      auto f = classify(std::current_exception());
      res.status = f.http_status;
      res.set_content(dump(error_to_json(f.code, f.message)), "application/json");
    }
  });
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  install_routes(server);
  log_info("listening on " + host + ":" + std::to_string(port));
  return server.listen(host, port);
}

} // namespace tal
