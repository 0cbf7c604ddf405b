#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "tal/ag_invariant.hpp"
#include "tal/enumerator.hpp"
#include "tal/gentle.hpp"
#include "tal/quiver.hpp"
#include "tal/tilde_a.hpp"

namespace tal {

using Json = nlohmann::ordered_json;

/// Strict reader: exact keys, string labels; ParseError names the field.
Quiver read_quiver(std::string_view text);
Quiver quiver_from_json(const Json& j, const std::string& where = "$");
/// Compact; vertices as given, arrows sorted by (from, to, id).
std::string write_quiver(const Quiver& q);
Json quiver_to_json(const Quiver& q);

Json params_to_json(const Parameters& p);
Parameters params_from_json(const Json& j, const std::string& where = "$");
Json trace_to_json(const MutationTrace& t);
Json relations_to_json(const GentleAlgebra& a);
/// Reads {"relations":[[a,b],...]} for the given quiver.
GentleAlgebra relations_from_json(const Quiver& q, const Json& j);
Json cartan_to_json(const CartanMatrix& c);
Json phi_to_json(const AGInvariant& phi);
Json decision_to_json(const DerivedDecision& d);
Json census_to_json(const ClassCensus& c);
Json error_to_json(const std::string& code, const std::string& message);

/// Parses text as JSON, turning syntax errors into ParseError.
Json parse_json(std::string_view text);
std::string dump(const Json& j);

} // namespace tal
