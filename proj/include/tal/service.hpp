#pragma once

#include <exception>
#include <map>
#include <string>

#include "tal/json_io.hpp"

namespace httplib {
class Server;
}

namespace tal {

/// recognized/reason, counts, and (when recognized) params, r_bar, s_bar,
/// phi and the Cartan matrix.
Json analysis_report(const Quiver& q);

// Request handlers shared by the CLI and the HTTP server. They throw.
Json api_mutate(const Json& request);       // {quiver, vertex} -> {quiver}
Json api_analyze(const Json& request);      // {quiver} -> report
Json api_reduce(const Json& request);       // {quiver} -> {steps, normal_form}
Json api_normal_form(const std::map<std::string, std::string>& query);  // r1..s2 -> {quiver}
Json api_derived_eq(const Json& request);   // {a, b} -> decision

Json reduce_output(const Reduction& r);

struct Failure {
  int exit_code;    // 2 NotInClass, 3 input, 4 internal
  int http_status;  // 422, 400, 500
  std::string code;
  std::string message;
};

/// Classifies the exception currently being handled.
Failure classify(std::exception_ptr e);

/// Writes the golden fixture set (inputs plus expected params / phi) into
/// `dir`; returns the number of fixtures.
std::size_t write_fixtures(const std::string& dir);

void install_routes(httplib::Server& server);
/// Blocks serving on host:port.
bool serve(const std::string& host, int port);

} // namespace tal
