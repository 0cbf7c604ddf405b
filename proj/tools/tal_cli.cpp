#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tal/error.hpp"
#include "tal/log.hpp"
#include "tal/service.hpp"

using namespace tal;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Quiver load(const std::string& path) {
  try {
    return read_quiver(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out = "") {
  if (out.empty() || out == "-") {
    std::cout << dump(j) << '\n';
  } else {
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write '" + out + "'");
    f << dump(j) << '\n';
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tal: mutation classes and derived equivalence for cluster-tilted algebras of type A~"};
  app.require_subcommand(0, 1);
  bool json_errors = false;
  std::string fixtures_dir;
  app.add_flag("--json", json_errors, "Report errors as JSON on stderr");
  app.add_option("--seed-fixtures", fixtures_dir, "Write the golden fixture set into DIR");

  std::string in, in_b, out, vertex, relations;
  Parameters p;
  int n = 0, port = 8080;
  std::string host = "127.0.0.1";
  std::size_t cap = kDefaultEnumerationCap;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool use_cluster_tilted = false;

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at a vertex");
  mutate_cmd->add_option("input", in, "Quiver JSON ('-' for stdin)")->required();
  mutate_cmd->add_option("--at", vertex, "Vertex label")->required();
  mutate_cmd->add_option("-o,--output", out, "Output file");

  auto* params_cmd = app.add_subcommand("params", "Canonical parameters");
  params_cmd->add_option("input", in)->required();

  auto* recognize_cmd = app.add_subcommand("recognize", "Membership report (exit 2 when not in the class)");
  recognize_cmd->add_option("input", in)->required();

  auto* nf_cmd = app.add_subcommand("normal-form", "Build the normal form");
  nf_cmd->add_option("--r1", p.r1)->required();
  nf_cmd->add_option("--r2", p.r2)->required();
  nf_cmd->add_option("--s1", p.s1)->required();
  nf_cmd->add_option("--s2", p.s2)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Mutation sequence to the normal form");
  reduce_cmd->add_option("input", in)->required();

  auto* cycle_cmd = app.add_subcommand("cycle-form", "Mutate to a non-oriented cycle");
  cycle_cmd->add_option("input", in)->required();

  auto* ag_cmd = app.add_subcommand("ag", "Derived invariant phi");
  ag_cmd->add_option("input", in)->required();
  auto* rel_opt = ag_cmd->add_option("--relations", relations, "Relations JSON");
  ag_cmd->add_flag("--cluster-tilted", use_cluster_tilted, "Use the 3-cycle relations (default)")
      ->excludes(rel_opt);

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix by path counting");
  cartan_cmd->add_option("input", in)->required();
  cartan_cmd->add_option("--relations", relations, "Relations JSON (default: cluster-tilted)");

  auto* deq_cmd = app.add_subcommand("derived-eq", "Derived equivalence decision");
  deq_cmd->add_option("a", in)->required();
  deq_cmd->add_option("b", in_b)->required();

  auto* meq_cmd = app.add_subcommand("mutation-eq", "Mutation equivalence decision");
  meq_cmd->add_option("a", in)->required();
  meq_cmd->add_option("b", in_b)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "Census of every class of A~_n (n+1 vertices), one NDJSON line per class");
  enum_cmd->add_option("--n", n, "n; the quivers have n+1 vertices")->required()->check(CLI::Range(1, 63));
  enum_cmd->add_option("--cap", cap, "Member cap per class");
  enum_cmd->add_option("--workers", workers, "BFS worker threads");

  auto* serve_cmd = app.add_subcommand("serve", "JSON over HTTP");
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!fixtures_dir.empty()) {
      auto count = write_fixtures(fixtures_dir);
      log_info("wrote " + std::to_string(count) + " fixtures to " + fixtures_dir);
    }
    if (*mutate_cmd) {
      emit(quiver_to_json(mutate(load(in), vertex)), out);
    } else if (*params_cmd) {
      emit(params_to_json(compute_parameters(load(in))));
    } else if (*recognize_cmd) {
      auto report = analysis_report(load(in));
      emit(report);
      return report["recognized"].get<bool>() ? 0 : 2;
    } else if (*nf_cmd) {
      emit(quiver_to_json(build_normal_form(p)));
    } else if (*reduce_cmd) {
      emit(reduce_output(reduce_to_normal_form(load(in))));
    } else if (*cycle_cmd) {
      emit(quiver_to_json(to_cycle_form(load(in))));
    } else if (*ag_cmd || *cartan_cmd) {
      auto q = load(in);
      GentleAlgebra a = relations.empty() ? cluster_tilted(q) : relations_from_json(q, parse_json(slurp(relations)));
      if (!relations.empty()) {
        auto violations = validate_gentle(a);
        if (!violations.empty())
          throw InvariantViolation("not gentle (condition " + std::to_string(violations.front().condition) +
                                   "): " + violations.front().message);
      }
      emit(*ag_cmd ? phi_to_json(phi(a)) : cartan_to_json(cartan(a)));
    } else if (*deq_cmd) {
      emit(decision_to_json(derived_equivalent(load(in), load(in_b))));
    } else if (*meq_cmd) {
      auto a = load(in), b = load(in_b);
      emit(Json{{"mutation_equivalent", mutation_equivalent(a, b)},
                {"params_a", params_to_json(compute_parameters(a))},
                {"params_b", params_to_json(compute_parameters(b))}});
    } else if (*enum_cmd) {
      const int vertices = n + 1;
      for (int r = 1; 2 * r <= vertices; ++r) {
        log_debug("enumerating class of cycle(" + std::to_string(r) + "," + std::to_string(vertices - r) + ")");
        std::cout << dump(census_to_json(enumerate_class(build_cycle(r, vertices - r), cap, workers))) << '\n'
                  << std::flush;
      }
    } else if (*serve_cmd) {
      if (!serve(host, port)) throw InvariantViolation("cannot listen on " + host + ":" + std::to_string(port));
    } else if (fixtures_dir.empty()) {
      std::cout << app.help();
    }
  } catch (...) {
    auto f = classify(std::current_exception());
    if (json_errors)
      std::cerr << dump(error_to_json(f.code, f.message)) << '\n';
    else
      std::cerr << "tal: " << f.code << ": " << f.message << '\n';
    return f.exit_code;
  }
  return 0;
}
