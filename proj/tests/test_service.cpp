#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "tal/canonical.hpp"
#include "tal/service.hpp"

using namespace tal;

namespace {

struct Running {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  Running() {
    install_routes(server);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~Running() {
    server.stop();
    thread.join();
  }
};

Json path_quiver() {
  return parse_json(R"({"vertices":["1","2","3"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"2","to":"3"}]})");
}

Json triangle_quiver() {
  return parse_json(
      R"({"vertices":["1","2","3"],"arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"2","to":"3"},{"id":"c","from":"3","to":"1"}]})");
}

} // namespace

TEST_CASE("http endpoints") {
  Running srv;
  httplib::Client cli("127.0.0.1", srv.port);

  SUBCASE("mutate") {
    Json req{{"quiver", path_quiver()}, {"vertex", "2"}};
    auto res = cli.Post("/api/mutate", dump(req), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto q = quiver_from_json(parse_json(res->body)["quiver"]);
    CHECK(is_isomorphic(q, quiver_from_json(triangle_quiver())));
    CHECK(res->body == dump(api_mutate(req)));
  }
  SUBCASE("analyze") {
    auto res = cli.Post("/api/analyze", dump(Json{{"quiver", triangle_quiver()}}), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto body = parse_json(res->body);
    CHECK(body["recognized"] == false);
    CHECK(body["reason"] == "NoNonOrientedCycle");
    CHECK_FALSE(body.contains("params"));

    auto nf = quiver_to_json(build_normal_form({2, 3, 3, 4}));
    auto ok = parse_json(cli.Post("/api/analyze", dump(Json{{"quiver", nf}}), "application/json")->body);
    CHECK(ok["recognized"] == true);
    CHECK(ok["params"]["r1"] == 2);
    CHECK(ok["phi"]["pairs"].size() == 3);
    CHECK(ok["cartan"]["matrix"].size() == 19);
  }
  SUBCASE("reduce") {
    auto q = mutate(mutate(build_cycle(3, 4), "c1"), "c2");
    auto res = cli.Post("/api/reduce", dump(Json{{"quiver", quiver_to_json(q)}}), "application/json");
    REQUIRE(res);
    auto body = parse_json(res->body);
    CHECK(body["steps"].is_array());
    CHECK(is_isomorphic(quiver_from_json(body["normal_form"]), build_normal_form(compute_parameters(q))));
  }
  SUBCASE("normal form") {
    auto res = cli.Get("/api/normal-form?r1=1&r2=0&s1=1&s2=0");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto q = quiver_from_json(parse_json(res->body)["quiver"]);
    CHECK(q.vertex_count() == 2);
    CHECK(q.multiplicity("c0", "c1") == 2);
    auto bad = cli.Get("/api/normal-form?r1=0&r2=0&s1=1&s2=0");
    CHECK(bad->status == 400);
    CHECK(cli.Get("/api/normal-form?r1=x&r2=0&s1=1&s2=0")->status == 400);
  }
  SUBCASE("derived equivalence") {
    Json req{{"a", quiver_to_json(build_normal_form({2, 1, 1, 0}))}, {"b", quiver_to_json(build_normal_form({0, 2, 1, 0}))}};
    auto res = cli.Post("/api/derived-eq", dump(req), "application/json");
    REQUIRE(res);
    auto body = parse_json(res->body);
    CHECK(body["derived_equivalent"] == false);
    CHECK(body["consistent"] == true);
  }
  SUBCASE("errors") {
    auto malformed = cli.Post("/api/analyze", "{not json", "application/json");
    CHECK(malformed->status == 400);
    CHECK(parse_json(malformed->body)["error"] == "ParseError");
    auto missing = cli.Post("/api/mutate", dump(Json{{"quiver", path_quiver()}}), "application/json");
    CHECK(missing->status == 400);
    auto unknown = cli.Post("/api/mutate", dump(Json{{"quiver", path_quiver()}, {"vertex", "9"}}), "application/json");
    CHECK(unknown->status == 400);
    auto outside = cli.Post("/api/reduce", dump(Json{{"quiver", triangle_quiver()}}), "application/json");
    CHECK(outside->status == 422);
    CHECK(parse_json(outside->body)["error"] == "NotInClass");
  }
}

#ifdef TAL_CLI_PATH
namespace {

int run(const std::string& args, std::string* out = nullptr) {
  auto tmp = std::filesystem::temp_directory_path() / "tal_cli_out.txt";
  int rc = std::system((std::string(TAL_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1").c_str());
  if (out) {
    std::ifstream f(tmp);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("command line") {
  auto dir = std::filesystem::temp_directory_path() / "tal_cli_fixtures";
  std::filesystem::remove_all(dir);
  REQUIRE(run("--seed-fixtures " + dir.string()) == 0);
  auto f = [&](const std::string& name) { return (dir / name).string(); };

  std::string out;
  CHECK(run("params " + f("cycle_5_7.json"), &out) == 0);
  CHECK(out == "{\"r1\":5,\"r2\":0,\"s1\":7,\"s2\":0,\"r_bar\":5,\"s_bar\":7}\n");
  CHECK(run("ag " + f("nf_2334.json") + " --cluster-tilted", &out) == 0);
  CHECK(out == "{\"pairs\":[{\"n\":0,\"m\":3,\"count\":7},{\"n\":5,\"m\":2,\"count\":1},{\"n\":7,\"m\":3,\"count\":1}]}\n");
  CHECK(run("derived-eq " + f("nf_2110.json") + " " + f("nf_0210.json"), &out) == 0);
  CHECK(parse_json(out)["derived_equivalent"] == false);
  CHECK(run("mutation-eq " + f("nf_2110.json") + " " + f("nf_0210.json"), &out) == 0);
  CHECK(parse_json(out)["mutation_equivalent"] == true);

  // analyze through the CLI equals the HTTP report byte for byte
  CHECK(run("recognize " + f("walk_b.json"), &out) == 0);
  std::ifstream in(f("walk_b.json"));
  std::stringstream doc;
  doc << in.rdbuf();
  CHECK(out == dump(api_analyze(Json{{"quiver", parse_json(doc.str())}})) + "\n");

  std::ofstream(f("tri.json")) << dump(triangle_quiver());
  CHECK(run("params " + f("tri.json")) == 2);
  CHECK(run("--json params " + f("tri.json"), &out) == 2);
  CHECK(parse_json(out)["error"] == "NotInClass");
  CHECK(run("params " + f("cycle_5_7.params.json")) == 3);
  CHECK(run("mutate " + f("tri.json") + " --at nowhere") == 3);
  CHECK(run("enumerate --n 3", &out) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 2);
}
#endif
