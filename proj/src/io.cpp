#include "toricforge/io.hpp"

#include "toricforge/catalog.hpp"
#include "toricforge/error.hpp"

namespace toricforge {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, "field '" + where + "': " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string dotted(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

}  // namespace

Json to_json(const Scalar& x) { return x.str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const IndexSet& s, int base) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + base);
  return a;
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (!j.is_string()) fail(where, "expected a scalar string such as \"1/2 + 3/4*phi\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Vec vec_from_json(const Json& j, const std::string& where, std::size_t expected_size) {
  if (!j.is_array()) fail(where, "expected an array");
  if (expected_size && j.size() != expected_size)
    fail(where, "expected " + std::to_string(expected_size) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], sub(where, i)));
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  std::vector<Vec> rows;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vec_from_json(j[i], sub(where, i), cols));
    cols = rows.back().size();
  }
  return Matrix::from_rows(rows, cols);
}

Json quasilattice_to_json(const Quasilattice& q) {
  Json out;
  out["name"] = q.name();
  Json gens = Json::array();
  for (const auto& g : q.generators()) gens.push_back(to_json(g));
  out["generators"] = gens;
  return out;
}

Quasilattice quasilattice_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "Zn" || name == "Z" + std::to_string(n)) return Quasilattice::standard(n);
    try {
      Quasilattice q = named_quasilattice(name);
      if (q.dim() != n) fail(where, "lattice " + name + " has dimension " + std::to_string(q.dim()));
      return q;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      fail(where, "unknown lattice name '" + name + "'");
    }
  }
  const Json& g = field(j, "generators", where);
  if (!g.is_array() || g.empty()) fail(dotted(where, "generators"), "expected a nonempty array");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(vec_from_json(g[i], sub(dotted(where, "generators"), i), n));
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  try {
    return Quasilattice(gens, name);
  } catch (const Error& e) {
    fail(dotted(where, "generators"), e.what());
  }
}

Instance parse_instance(const Json& root) {
  if (root.is_object() && root.contains("input") && root["input"].is_object()) return parse_instance(root["input"]);
  if (!root.is_object()) fail("", "expected a JSON object");
  std::string field_name = "golden";
  if (root.contains("field")) {
    if (!root["field"].is_string()) fail("field", "expected \"rational\" or \"golden\"");
    field_name = root["field"].get<std::string>();
    if (field_name != "rational" && field_name != "golden") fail("field", "expected \"rational\" or \"golden\"");
  }
  std::size_t n = 0;
  if (root.contains("ambient_dim")) {
    if (!root["ambient_dim"].is_number_integer() || root["ambient_dim"].get<long long>() <= 0)
      fail("ambient_dim", "expected a positive integer");
    n = root["ambient_dim"].get<std::size_t>();
  }
  auto check_field = [&](const Vec& v, const std::string& where) {
    if (field_name != "rational") return;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_rational()) fail(sub(where, i), "irrational value in a rational input");
  };

  std::optional<Polytope> polytope;
  try {
    if (root.contains("halfspaces")) {
      const Json& hs = root["halfspaces"];
      if (!hs.is_array() || hs.empty()) fail("halfspaces", "expected a nonempty array");
      HPolytope h;
      for (std::size_t i = 0; i < hs.size(); ++i) {
        std::string where = sub("halfspaces", i);
        Vec x = vec_from_json(field(hs[i], "X", where), where + ".X", n);
        if (n == 0) n = x.size();
        check_field(x, where + ".X");
        Scalar lambda = scalar_from_json(field(hs[i], "lambda", where), where + ".lambda");
        check_field({lambda}, where + ".lambda");
        h.halfspaces.push_back({x, lambda});
      }
      h.dim = static_cast<int>(n);
      std::optional<std::vector<Vec>> order;
      if (root.contains("vertices")) {
        std::vector<Vec> vs;
        const Json& vj = root["vertices"];
        if (!vj.is_array()) fail("vertices", "expected an array");
        for (std::size_t i = 0; i < vj.size(); ++i) vs.push_back(vec_from_json(vj[i], sub("vertices", i), n));
        order = vs;
      }
      polytope.emplace(h, order);
    } else if (root.contains("vertices")) {
      const Json& vj = root["vertices"];
      if (!vj.is_array() || vj.empty()) fail("vertices", "expected a nonempty array");
      VPolytope v;
      for (std::size_t i = 0; i < vj.size(); ++i) {
        v.vertices.push_back(vec_from_json(vj[i], sub("vertices", i), n));
        if (n == 0) n = v.vertices.back().size();
        check_field(v.vertices.back(), sub("vertices", i));
      }
      v.dim = static_cast<int>(n);
      polytope.emplace(Polytope::from_vertices(v));
    } else {
      fail("halfspaces", "missing (give \"halfspaces\" and/or \"vertices\")");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(e.code(), std::string("polytope: ") + e.what());
  }
  Quasilattice q = root.contains("lattice") ? quasilattice_from_json(root["lattice"], n, "lattice")
                                            : Quasilattice::standard(n);
  std::string name = root.contains("name") && root["name"].is_string() ? root["name"].get<std::string>() : "input";
  return Instance{name, std::move(*polytope), std::move(q)};
}

Instance parse_instance_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return parse_instance(j);
}

Json instance_to_json(const Instance& in) {
  const Polytope& p = in.polytope;
  bool golden = false;
  Json hs = Json::array();
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    const auto& h = p.h().halfspaces[j];
    for (const auto& x : h.normal) golden = golden || !x.is_rational();
    golden = golden || !h.lambda.is_rational();
    hs.push_back({{"X", to_json(h.normal)}, {"lambda", to_json(h.lambda)}});
  }
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  Json out;
  out["name"] = in.name;
  out["field"] = golden ? "golden" : "rational";
  out["ambient_dim"] = static_cast<std::size_t>(p.dim());
  out["halfspaces"] = hs;
  out["vertices"] = vs;
  out["lattice"] = quasilattice_to_json(in.lattice);
  return out;
}

}  // namespace toricforge
