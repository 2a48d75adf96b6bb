#pragma once

// JSON input and output. Scalars are written in the exact text syntax
// ("1/2 + 3/4*phi"), so every report re-parses to the same values.

#include "toricforge/polytope.hpp"
#include "toricforge/quasilattice.hpp"

#include "json.hpp"

#include <string>

namespace toricforge {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& x);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);  // list of rows
Json to_json(const IndexSet& s, int base = 1);

// `where` names the field in diagnostics, e.g. "halfspaces[2].X[1]".
Scalar scalar_from_json(const Json& j, const std::string& where);
Vec vec_from_json(const Json& j, const std::string& where, std::size_t expected_size = 0);
Matrix matrix_from_json(const Json& j, const std::string& where);

struct Instance {
  std::string name;
  Polytope polytope;
  Quasilattice lattice;
};

// Accepts {"field", "ambient_dim", "halfspaces"| "vertices", "lattice"} or any
// report that embeds such an object under "input". The lattice is a catalog
// name (Z3, L, P, B), "Zn", or {"generators": [...], "name": ...}; it defaults
// to the standard lattice. Throws PARSE with the offending field.
Instance parse_instance(const Json& j);
// Parses text first; syntax errors report line and column.
Instance parse_instance_text(const std::string& text);
Json instance_to_json(const Instance& in);

Json quasilattice_to_json(const Quasilattice& q);
Quasilattice quasilattice_from_json(const Json& j, std::size_t n, const std::string& where);

}  // namespace toricforge
