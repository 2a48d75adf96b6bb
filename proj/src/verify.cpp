#include "toricforge/verify.hpp"

#include "toricforge/catalog.hpp"
#include "toricforge/charts.hpp"
#include "toricforge/error.hpp"
#include "toricforge/reference.hpp"
#include "toricforge/strata.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace toricforge {

bool CriterionResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].pretty();
  return s + ")";
}

std::vector<Vec> random_interior_points(const Polytope& p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 50);
  std::vector<Vec> out;
  for (int t = 0; t < count; ++t) {
    Vec mu = zero_vec(static_cast<std::size_t>(p.dim()));
    Scalar total = 0;
    for (const auto& v : p.vertices()) {
      Scalar c = weight(rng);
      mu = mu + c * v;
      total = total + c;
    }
    out.push_back((Scalar(1) / total) * mu);
  }
  return out;
}

namespace {

struct Solid {
  SolidEntry entry;
  DelzantInput input;
  DelzantData data;
};

class Context {
 public:
  const Solid& get(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      SolidEntry e = get_solid(name);
      DelzantInput in = DelzantInput::make(e.polytope, e.lattice);
      DelzantData d = build(in);
      it = cache_.emplace(name, std::make_unique<Solid>(Solid{std::move(e), std::move(in), std::move(d)})).first;
    }
    return *it->second;
  }

 private:
  std::map<std::string, std::unique_ptr<Solid>> cache_;
};

Check check(std::string name, bool pass, std::string detail = "") { return {std::move(name), pass, std::move(detail)}; }

// Runs f, turning an exception into a failed check.
Check guarded(const std::string& name, const std::function<Check()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return check(name, false, std::string("error: ") + e.what());
  }
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

const std::map<std::string, std::size_t>& kernel_dims() {
  static const std::map<std::string, std::size_t> dims{
      {"tetrahedron", 1}, {"cube", 3}, {"octahedron", 5}, {"dodecahedron", 9}, {"icosahedron", 17}};
  return dims;
}

struct Flags {
  bool simple, rational;
};
const std::map<std::string, Flags>& classification() {
  static const std::map<std::string, Flags> flags{{"tetrahedron", {true, true}},
                                                  {"cube", {true, true}},
                                                  {"octahedron", {false, true}},
                                                  {"dodecahedron", {true, false}},
                                                  {"icosahedron", {false, false}}};
  return flags;
}

Check kernel_dim_check(Context& ctx, const std::string& name) {
  std::size_t k = ctx.get(name).data.kernel.basis.rows();
  std::size_t want = kernel_dims().at(name);
  return check(name + " kernel dimension", k == want, std::to_string(k) + " (expected " + std::to_string(want) + ")");
}

Check moment_system_check(Context& ctx, const std::string& name) {
  const auto& m = ctx.get(name).data.moment;
  auto ref = reference::moment_system(name);
  return check(name + " moment system", moment_system_matches(m, ref.B, ref.c),
               std::to_string(m.B.rows()) + " rows, row space of [B|c] vs printed system");
}

Check vertex_table_check(Context& ctx, const std::string& name) {
  const auto& p = ctx.get(name).input.polytope;
  auto table = reference::vertex_table(name);
  bool ok = table.size() == p.vertices().size();
  for (std::size_t v = 0; ok && v < table.size(); ++v) ok = p.vertex_active(static_cast<int>(v)) == table[v];
  return check(name + " vertex/plane incidence", ok, std::to_string(table.size()) + " vertices");
}

Check plane_table_check(Context& ctx, const std::string& name) {
  const auto& p = ctx.get(name).input.polytope;
  auto table = reference::plane_table(name);
  bool ok = table.size() == p.num_facets();
  for (std::size_t j = 0; ok && j < table.size(); ++j) ok = p.facet_vertices(static_cast<int>(j)) == table[j];
  return check(name + " plane/vertex incidence", ok, std::to_string(table.size()) + " planes");
}

Check flags_check(Context& ctx, const std::string& name) {
  const auto& s = ctx.get(name);
  bool simple = s.input.polytope.is_simple();
  bool rational = is_rational(s.input.polytope.h());
  Flags want = classification().at(name);
  return check(name + " simple/rational", simple == want.simple && rational == want.rational,
               std::string(simple ? "simple" : "nonsimple") + ", " + (rational ? "rational" : "nonrational"));
}

Check identity_check(const std::string& label, const MomentSystem& m, const DelzantInput& in) {
  auto r = moment_polytope_identity(m, in);
  return check(label + " moment polytope identity", r.ok(),
               std::to_string(r.bfs_count) + " basic feasible solutions vs " +
                   std::to_string(in.polytope.vertices().size()) + " vertices");
}

Check residual_check(const std::string& label, const MomentSystem& m, const DelzantInput& in, const VerifyOptions& o) {
  double worst = 0;
  for (const auto& mu : random_interior_points(in.polytope, o.samples, o.seed))
    worst = std::max(worst, sample_level_set(m, in, mu, {}, o.precision).max_residual);
  return check(label + " float residuals", worst <= o.tol,
               "max " + num(worst) + " over " + std::to_string(o.samples) + " interior points, tol " + num(o.tol));
}

Check chart_group_check(Context& ctx, const reference::ChartGroupReference& ref) {
  const auto& in = ctx.get(ref.solid).input;
  std::string label = ref.solid + " chart group at " + index_set_str(ref.triple);
  if (!ref.vertex.empty()) {
    Vec mu;
    for (int x : ref.vertex) mu.push_back(Scalar(x));
    auto v = in.polytope.find_vertex(mu);
    if (!v || in.polytope.vertex_active(*v) != ref.triple) return check(label, false, "vertex " + vec_str(mu) + " not at the triple");
  }
  auto g = chart_group(in, ref.triple);
  return check(label, same_group_mod_integers(g.generators, ref.generators),
               std::to_string(g.generators.size()) + " generators, two-sided membership mod Z^3");
}

Check trivial_charts_check(Context& ctx, const std::string& name) {
  const auto& in = ctx.get(name).input;
  auto charts = admissible_charts(in);
  bool ok = std::all_of(charts.begin(), charts.end(), [&](const ChartId& c) { return chart_group(in, c.triple).trivial(); });
  return check(name + " chart groups trivial", ok, std::to_string(charts.size()) + " charts");
}

Check tau_check(Context& ctx) {
  const auto& s = ctx.get("octahedron");
  auto t = tau_chart(s.input, s.data.moment, 0, reference::octahedron_tau_triple());
  bool ok = t.dependent.size() == reference::octahedron_tau().size();
  for (const auto& r : reference::octahedron_tau()) {
    auto it = t.dependent.find(r.index);
    ok = ok && it != t.dependent.end() && it->second.constant == r.constant && it->second.coeffs == r.coeffs;
  }
  int bounds = 0, sandwich = 0;
  for (const auto& d : t.domain) (d.bound ? bounds : sandwich)++;
  ok = ok && bounds == 3 && sandwich == 2;
  return check("octahedron tau chart at nu1, T = {3,4,5}", ok,
               std::to_string(t.dependent.size()) + " forms; domain " + std::to_string(bounds) + " bounds, " +
                   std::to_string(sandwich) + " sandwich");
}

Check closed_orbit_check(Context& ctx) {
  const auto& s = ctx.get("octahedron");
  const auto& faces = s.input.polytope.faces();
  std::size_t admissible = 0, closed = 0;
  bool ok = true;
  int d = static_cast<int>(s.input.d());
  for (int k = 0; k <= d; ++k) {
    for_each_subset(d, k, [&](const std::vector<int>& j) {
      if (!s.data.model.admissible(j)) return true;
      ++admissible;
      bool c = orbit_is_closed(s.data.model, faces, j);
      bool is_face = std::any_of(faces.begin(), faces.end(), [&](const Face& f) { return f.active == j; });
      ok = ok && c == is_face;
      closed += c ? 1 : 0;
      return true;
    });
  }
  const Face& limit = closed_orbit_in_closure(s.input.polytope, s.data.model, IndexSet{3, 4, 5});
  bool example = limit.active == s.input.polytope.vertex_active(0) && limit.dim == 0;
  return check("octahedron closed orbits", ok && example && closed == faces.size(),
               std::to_string(admissible) + " admissible patterns, " + std::to_string(closed) +
                   " closed; J = {4,5,6} -> face " + index_set_str(limit.active));
}

Check atlas_check(Context& ctx, const std::string& name, std::size_t want_local) {
  auto a = atlas_enumerate(ctx.get(name).input);
  return check(name + " atlas", a.exact && a.local_cover == want_local,
               std::to_string(a.charts.size()) + " admissible charts, minimal local cover " +
                   std::to_string(a.local_cover) + ", minimal global cover " + std::to_string(a.global_cover));
}

PlaneOverride icosahedron_override() {
  PlaneOverride o;
  o.normal = reference::icosahedron_cut_normal();
  o.offset = reference::icosahedron_cut_offset();
  return o;
}

PlaneOverride octahedron_yz_override() {
  PlaneOverride o;
  o.normal = Vec{1, 0, 0};
  o.offset = Scalar(0);
  o.plane_basis = Matrix::from_rows({{0, Scalar::fraction(1, 2), Scalar::fraction(-1, 2)},
                                     {0, Scalar::fraction(1, 2), Scalar::fraction(1, 2)}});
  return o;
}

bool same_set(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Vec& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

Check octahedron_square_check(Context& ctx) {
  auto l = link_at_vertex(ctx.get("octahedron").input, 0, octahedron_yz_override());
  const auto& verts = l.input.polytope.vertices();
  bool ok = same_set(verts, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  std::string shown;
  for (const auto& v : verts) shown += vec_str(v) + " ";
  return check("octahedron nu1 link square", ok, "yz-cut, plane coordinates " + shown);
}

Check octahedron_fiber_check(Context& ctx) {
  const auto& in = ctx.get("octahedron").input;
  auto f = fiber_group(cone_at_vertex(in, 0), link_at_vertex(in, 0));
  bool ok = f.group.kind == SubgroupKind::Discrete && *f.group.generator == Scalar(1);
  return check("octahedron nu1 fiber", ok,
               std::string(subgroup_kind_name(f.group.kind)) + " " + f.presentation + ", w = " + vec_str(f.w));
}

LinkModel icosahedron_link(Context& ctx) {
  return link_at_vertex(ctx.get("icosahedron").input, reference::icosahedron_link_vertex(), icosahedron_override());
}

std::vector<Vec> lifted(const LinkModel& l) {
  std::vector<Vec> out;
  for (const auto& y : l.input.polytope.vertices()) {
    Vec mu = l.plane.point;
    for (std::size_t k = 0; k < y.size(); ++k) mu = mu + y[k] * l.plane.plane_basis.row(k);
    out.push_back(mu);
  }
  return out;
}

Check icosahedron_pentagon_check(Context& ctx) {
  const auto& in = ctx.get("icosahedron").input;
  auto l = icosahedron_link(ctx);
  auto pts = lifted(l);
  std::vector<Vec> want;
  for (int u : reference::icosahedron_pentagon()) want.push_back(in.polytope.vertices()[static_cast<std::size_t>(u)]);
  bool vertices_ok = same_set(pts, want);
  std::vector<Scalar> lengths;
  const auto& p = l.input.polytope;
  for (int a = 0; a < static_cast<int>(pts.size()); ++a)
    for (int b : p.adjacent_vertices(a))
      if (a < b) {
        Vec d = pts[static_cast<std::size_t>(a)] - pts[static_cast<std::size_t>(b)];
        lengths.push_back(dot(d, d));
      }
  bool equal = lengths.size() == 5 && std::all_of(lengths.begin(), lengths.end(), [&](const Scalar& x) { return x == lengths[0]; });
  return check("icosahedron nu4 link pentagon", vertices_ok && equal,
               "vertices {nu1,nu2,nu9,nu11,nu12}: " + std::string(vertices_ok ? "match" : "differ") +
                   "; squared edges " + (lengths.empty() ? "-" : lengths[0].pretty()) + (equal ? " (all equal)" : " (unequal)"));
}

Check icosahedron_fiber_literal_check(Context& ctx) {
  const auto& in = ctx.get("icosahedron").input;
  int v = reference::icosahedron_link_vertex();
  auto f = fiber_group(cone_at_vertex(in, v), icosahedron_link(ctx), reference::icosahedron_link_kernel().row(0));
  bool literal = f.group.kind == SubgroupKind::Discrete && f.group.generator == reference::icosahedron_fiber_period();
  std::string detail = std::string("computed ") + subgroup_kind_name(f.group.kind) + " " + f.presentation;
  if (f.phi_generator)
    detail += "; irrational layer c = " + f.phi_generator->pretty() + (*f.phi_generator == reference::icosahedron_fiber_period() ? " (matches 2φ)" : "");
  if (f.rational_generator) detail += ", rational layer p = " + f.rational_generator->pretty();
  detail += "; expected DISCRETE 2φ, and the class does not depend on w";
  return check("icosahedron nu4 fiber DISCRETE 2φ", literal, detail);
}

Check icosahedron_link_system_check(Context& ctx) {
  auto l = icosahedron_link(ctx);
  auto ref = reference::icosahedron_link_system();
  return check("icosahedron link moment system", moment_system_matches(l.data.moment, ref.B, ref.c), "3 rows, rhs 2/φ, 0, 0");
}

Check icosahedron_numeric_check(Context& ctx, double tol) {
  auto l = icosahedron_link(ctx);
  auto ref = reference::icosahedron_link_normals_numeric();
  double worst = 0;
  for (std::size_t i = 0; i < ref.size() && i < l.numeric_normals.size(); ++i)
    for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(l.numeric_normals[i][static_cast<std::size_t>(k)] - ref[i][static_cast<std::size_t>(k)]));
  return check("icosahedron link normals (orthonormal frame)", ref.size() == l.numeric_normals.size() && worst <= tol,
               "max deviation " + num(worst) + ", tol " + num(tol));
}

Check octahedron_isotropy_dim_check(Context& ctx) {
  const auto& s = ctx.get("octahedron");
  Matrix iso = isotropy_algebra(s.data.kernel, s.input.polytope.vertex_face(0));
  return check("octahedron nu1 isotropy dimension", iso.rows() == 1,
               std::to_string(iso.rows()) + "; spanned by " + (iso.rows() ? vec_str(iso.row(0)) : "-"));
}

Check octahedron_isotropy_pattern_check(Context& ctx) {
  const auto& s = ctx.get("octahedron");
  Vec printed = reference::octahedron_isotropy_as_printed();
  bool any = false;
  std::string where;
  for (int v = 0; v < static_cast<int>(s.input.polytope.vertices().size()); ++v) {
    Matrix iso = isotropy_algebra(s.data.kernel, s.input.polytope.vertex_face(v));
    if (in_row_space(iso, printed)) {
      any = true;
      where = " at vertex " + std::to_string(v + 1);
    }
  }
  bool in_kernel = is_zero(s.data.kernel.pi * printed);
  return check("octahedron isotropy pattern (0,0,t,t,0,0,t,t)", any,
               any ? "found" + where
                   : std::string("not the isotropy of any vertex; ") + (in_kernel ? "it lies in ker π" : "not in ker π") +
                         " but its support {3,4,7,8} contains opposite facets, which never meet");
}

Check icosahedron_cone_check(Context& ctx) {
  auto c = cone_at_vertex(ctx.get("icosahedron").input, reference::icosahedron_link_vertex());
  return check("icosahedron nu4 cone kernel", same_row_space(c.kernel, reference::icosahedron_cone_kernel()),
               "(−φs−t, φ(s+t), s, −s−φt, t)");
}

Check lattice_checks(Context&) {
  bool p = !is_lattice(named_quasilattice("P"));
  bool b = !is_lattice(named_quasilattice("B"));
  Quasilattice l = named_quasilattice("L");
  auto idx = lattice_index_in_standard(l);
  Integer det = int_determinant(IntMatrix::from_rows({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}}));
  if (det < 0) det = -det;
  bool ok = p && b && is_lattice(l) && idx && *idx == 4 && det == 4;
  return check("P, B not lattices; L index 4", ok,
               std::string("P ") + (p ? "not a lattice" : "lattice") + ", B " + (b ? "not a lattice" : "lattice") +
                   ", [Z^3 : L] = " + (idx ? idx->str() : "-") + ", |det(Y1,Y2,Y3)| = " + det.str());
}

Check connected_check(Context& ctx, const std::string& name) {
  return check(name + " N connected", n_is_connected(ctx.get(name).input), "X_j generate the quasilattice");
}

}  // namespace

std::vector<Check> verify_instance(const DelzantInput& input, const VerifyOptions& o) {
  std::vector<Check> out;
  out.push_back(guarded("quasirational", [&] {
    bool ok = true;
    for (std::size_t j = 0; j < input.d(); ++j)
      ok = ok && verify_certificate(input.lattice, input.polytope.normal(static_cast<int>(j)), input.certificates[j]);
    return check("quasirationality certificates", ok, std::to_string(input.d()) + " normals");
  }));
  DelzantData d = build(input);
  out.push_back(check("kernel dimension", d.kernel.basis.rows() == input.d() - input.n(),
                      std::to_string(d.kernel.basis.rows()) + " = d - n"));
  out.push_back(guarded("identity", [&] { return identity_check("", d.moment, input); }));
  out.push_back(guarded("residuals", [&] { return residual_check("", d.moment, input, o); }));
  for (auto& c : out)
    if (!c.name.empty() && c.name.front() == ' ') c.name.erase(0, 1);
  return out;
}

std::vector<Check> verify_solid(const std::string& name, const VerifyOptions& o) {
  Context ctx;
  const auto& s = ctx.get(name);
  std::vector<Check> out = verify_instance(s.input, o);
  auto add = [&](const std::string& label, const std::function<Check()>& f) { out.push_back(guarded(label, f)); };
  add("kernel", [&] { return kernel_dim_check(ctx, name); });
  add("system", [&] { return moment_system_check(ctx, name); });
  add("flags", [&] { return flags_check(ctx, name); });
  if (name == "tetrahedron") {
    add("charts", [&] { return trivial_charts_check(ctx, name); });
    add("atlas", [&] { return atlas_check(ctx, name, 4); });
  } else if (name == "cube") {
    add("charts", [&] { return trivial_charts_check(ctx, name); });
    add("scaled", [&] {
      auto e = get_solid("cube", Scalar(5));
      auto in = DelzantInput::make(e.polytope, e.lattice);
      return identity_check("cube (±5)", build(in).moment, in);
    });
  } else if (name == "octahedron") {
    add("vertices", [&] { return vertex_table_check(ctx, name); });
    add("planes", [&] { return plane_table_check(ctx, name); });
    add("charts", [&] { return trivial_charts_check(ctx, name); });
    add("tau", [&] { return tau_check(ctx); });
    add("orbits", [&] { return closed_orbit_check(ctx); });
    add("isotropy", [&] { return octahedron_isotropy_dim_check(ctx); });
    add("square", [&] { return octahedron_square_check(ctx); });
    add("fiber", [&] { return octahedron_fiber_check(ctx); });
    add("atlas", [&] { return atlas_check(ctx, name, 12); });
    add("connected", [&] { return connected_check(ctx, name); });
  } else if (name == "dodecahedron") {
    add("chart group", [&] { return chart_group_check(ctx, reference::dodecahedron_chart_group()); });
    add("atlas", [&] { return atlas_check(ctx, name, 20); });
    add("connected", [&] { return connected_check(ctx, name); });
  } else if (name == "icosahedron") {
    add("vertices", [&] { return vertex_table_check(ctx, name); });
    add("chart group", [&] { return chart_group_check(ctx, reference::icosahedron_chart_group()); });
    add("cone", [&] { return icosahedron_cone_check(ctx); });
    add("link system", [&] { return icosahedron_link_system_check(ctx); });
    add("pentagon", [&] { return icosahedron_pentagon_check(ctx); });
    add("numeric", [&] { return icosahedron_numeric_check(ctx, o.tol); });
    add("fiber", [&] {
      const auto& in = ctx.get(name).input;
      auto f = fiber_group(cone_at_vertex(in, reference::icosahedron_link_vertex()), icosahedron_link(ctx),
                           reference::icosahedron_link_kernel().row(0));
      bool ok = f.group.kind == SubgroupKind::Dense && f.phi_generator == reference::icosahedron_fiber_period() &&
                f.rational_generator == Scalar(1);
      return check("icosahedron nu4 fiber quasicircle", ok, f.presentation);
    });
    add("connected", [&] { return connected_check(ctx, name); });
  }
  return out;
}

std::vector<CriterionResult> acceptance_criteria(const VerifyOptions& o) {
  Context ctx;
  std::vector<CriterionResult> out;
  auto criterion = [&](int id, std::string title, const std::vector<std::function<Check()>>& fs) {
    CriterionResult r{id, std::move(title), {}};
    for (const auto& f : fs) r.checks.push_back(guarded(r.title, f));
    out.push_back(std::move(r));
  };
  const auto& names = solid_names();

  std::vector<std::function<Check()>> c1, c2, c9, c10;
  for (const auto& n : names) {
    c1.push_back([&ctx, n] { return kernel_dim_check(ctx, n); });
    c2.push_back([&ctx, n] { return moment_system_check(ctx, n); });
    c9.push_back([&ctx, n] { return identity_check(n, ctx.get(n).data.moment, ctx.get(n).input); });
    c10.push_back([&ctx, n, &o] { return residual_check(n, ctx.get(n).data.moment, ctx.get(n).input, o); });
  }
  criterion(1, "kernel dimensions", c1);
  c2.push_back([&] { return icosahedron_link_system_check(ctx); });
  criterion(2, "moment systems", c2);

  std::vector<std::function<Check()>> c3{[&] { return vertex_table_check(ctx, "octahedron"); },
                                         [&] { return plane_table_check(ctx, "octahedron"); },
                                         [&] { return vertex_table_check(ctx, "icosahedron"); }};
  for (const auto& n : names) c3.push_back([&ctx, n] { return flags_check(ctx, n); });
  criterion(3, "face data", c3);

  criterion(4, "chart groups",
            {[&] { return chart_group_check(ctx, reference::dodecahedron_chart_group()); },
             [&] { return chart_group_check(ctx, reference::icosahedron_chart_group()); },
             [&] { return trivial_charts_check(ctx, "cube"); }, [&] { return trivial_charts_check(ctx, "tetrahedron"); }});
  criterion(5, "tau charts", {[&] { return tau_check(ctx); }});
  criterion(6, "links and fibers",
            {[&] { return octahedron_square_check(ctx); }, [&] { return octahedron_fiber_check(ctx); },
             [&] { return icosahedron_pentagon_check(ctx); }, [&] { return icosahedron_fiber_literal_check(ctx); }});
  criterion(7, "isotropy",
            {[&] { return octahedron_isotropy_dim_check(ctx); }, [&] { return octahedron_isotropy_pattern_check(ctx); },
             [&] { return icosahedron_cone_check(ctx); }});
  criterion(8, "closed orbits", {[&] { return closed_orbit_check(ctx); }});
  c9.push_back([&] {
    auto e = get_solid("cube", Scalar(5));
    auto in = DelzantInput::make(e.polytope, e.lattice);
    return identity_check("cube (±5)", build(in).moment, in);
  });
  criterion(9, "moment polytope identity", c9);
  c10.push_back([&] { return icosahedron_numeric_check(ctx, 1e-9); });
  criterion(10, "numeric cross-checks", c10);
  std::vector<std::function<Check()>> c11{[&] { return lattice_checks(ctx); }};
  for (const char* n : {"octahedron", "dodecahedron", "icosahedron"})
    c11.push_back([&ctx, n] { return connected_check(ctx, n); });
  criterion(11, "quasilattice properties", c11);
  criterion(12, "atlas counts",
            {[&] {
               auto a = atlas_enumerate(ctx.get("dodecahedron").input);
               return check("dodecahedron atlas", a.exact && a.charts.size() == 20 && a.global_cover == 20,
                            std::to_string(a.charts.size()) + " charts, one per vertex; minimal cover " +
                                std::to_string(a.global_cover));
             },
             [&] { return atlas_check(ctx, "octahedron", 12); }});
  return out;
}

}  // namespace toricforge
