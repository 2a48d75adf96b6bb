#include "toricforge/report.hpp"

#include "toricforge/charts.hpp"
#include "toricforge/error.hpp"

#include <sstream>

namespace toricforge {

namespace {

std::string label(int v) { return "ν" + std::to_string(v + 1); }
std::string label_ascii(int v) { return "nu" + std::to_string(v + 1); }

// Coefficient text for a term; parenthesized when it is a sum.
std::string coefficient_md(const Scalar& c) {
  if (c == Scalar(1)) return "";
  std::string s = c.pretty();
  if (s.find_first_of("+-", 1) != std::string::npos) return "(" + s + ")";
  return s;
}

std::string vec_md(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].pretty();
  return s + ")";
}

std::string multiple_md(const Scalar& g) { return g == Scalar(1) ? "ℤ" : coefficient_md(g) + "ℤ"; }

std::string bool_md(bool b) { return b ? "yes" : "no"; }

Json face_json(const Face& f) { return {{"active", to_json(f.active)}, {"dim", f.dim}, {"vertices", to_json(f.vertex_ids)}}; }

Json subgroup_json(const RealSubgroup& g) {
  Json out;
  out["class"] = g.kind == SubgroupKind::Trivial ? "trivial" : (g.kind == SubgroupKind::Discrete ? "discrete" : "dense");
  if (g.generator) out["generator"] = to_json(*g.generator);
  out["basis"] = to_json(Vec(g.basis.begin(), g.basis.end()));
  return out;
}

Json fiber_json(const FiberReport& f) {
  Json out = subgroup_json(f.group);
  out["w"] = to_json(f.w);
  if (f.rational_generator) out["rational_layer"] = to_json(*f.rational_generator);
  if (f.phi_generator) out["phi_layer"] = to_json(*f.phi_generator);
  out["presentation"] = f.presentation;
  out["without_components"] = subgroup_json(f.connected_group);
  return out;
}

Json form_json(const AffineForm& f) {
  Json coeffs = Json::object();
  for (const auto& [i, c] : f.coeffs) coeffs[std::to_string(i + 1)] = to_json(c);
  return {{"const", to_json(f.constant)}, {"coeffs", coeffs}};
}

std::string form_md(const AffineForm& f) {
  std::string s;
  if (!f.constant.is_zero() || f.coeffs.empty()) s = f.constant.pretty();
  for (const auto& [i, c] : f.coeffs) {
    bool neg = c.sign() < 0;
    std::string term = coefficient_md(c.abs()) + "|u_" + std::to_string(i + 1) + "|²";
    if (s.empty())
      s = (neg ? "−" : "") + term;
    else
      s += (neg ? " − " : " + ") + term;
  }
  return s;
}

std::string system_md(const MomentSystem& m) {
  std::string s;
  for (std::size_t i = 0; i < m.B.rows(); ++i) s += "    " + equation_md(m.B.row(i), m.c[i]) + "\n";
  return s;
}

Json delzant_json(const DelzantInput& in, const DelzantData& d) {
  Json out;
  out["kernel_dim"] = d.kernel.basis.rows();
  out["kernel_basis"] = to_json(d.kernel.basis);
  out["moment_system"] = {{"B", to_json(d.moment.B)}, {"c", to_json(d.moment.c)}};
  out["connected"] = n_is_connected(in);
  Json patterns = Json::object();
  for (std::size_t v = 0; v < d.model.vertex_patterns.size(); ++v)
    patterns[label_ascii(static_cast<int>(v))] = to_json(d.model.vertex_patterns[v]);
  out["vertex_patterns"] = patterns;
  return out;
}

DelzantInput make_input(const Instance& in) { return DelzantInput::make(in.polytope, in.lattice); }

}  // namespace

std::string equation_md(const Vec& row, const Scalar& rhs) {
  std::string s;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const Scalar& c = row[j];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    std::string term = coefficient_md(c.abs()) + "|z_" + std::to_string(j + 1) + "|²";
    if (s.empty())
      s = (neg ? "−" : "") + term;
    else
      s += (neg ? " − " : " + ") + term;
  }
  if (s.empty()) s = "0";
  return s + " = " + rhs.pretty();
}

Report catalog_list_report() {
  Report r;
  r.json = Json::array();
  r.markdown = "| solid | facets | vertices | simple | rational | quasilattice |\n|---|---|---|---|---|---|\n";
  for (const auto& name : solid_names()) {
    SolidEntry e = get_solid(name);
    r.json.push_back({{"name", name},
                      {"facets", e.polytope.num_facets()},
                      {"vertices", e.polytope.vertices().size()},
                      {"simple", e.simple},
                      {"rational", e.rational},
                      {"lattice", e.lattice.name()}});
    r.markdown += "| " + name + " | " + std::to_string(e.polytope.num_facets()) + " | " +
                  std::to_string(e.polytope.vertices().size()) + " | " + bool_md(e.simple) + " | " + bool_md(e.rational) +
                  " | " + e.lattice.name() + " |\n";
  }
  return r;
}

Report catalog_show_report(const SolidEntry& e) {
  Report r;
  r.json = instance_to_json(Instance{e.name, e.polytope, e.lattice});
  r.json["simple"] = e.simple;
  r.json["rational"] = e.rational;
  Json notes = Json::object();
  for (const auto& [k, v] : e.annotations) notes[k] = v;
  r.json["annotations"] = notes;
  std::ostringstream md;
  md << "# " << e.name << "\n\nQuasilattice " << e.lattice.name() << "; simple: " << bool_md(e.simple)
     << "; rational: " << bool_md(e.rational) << "\n\n## Facets ⟨μ, X_j⟩ ≥ λ_j\n\n| j | X_j | λ_j |\n|---|---|---|\n";
  for (std::size_t j = 0; j < e.polytope.num_facets(); ++j)
    md << "| " << j + 1 << " | " << vec_md(e.polytope.normal(static_cast<int>(j))) << " | "
       << e.polytope.lambda(static_cast<int>(j)).pretty() << " |\n";
  md << "\n## Vertices\n\n";
  for (std::size_t v = 0; v < e.polytope.vertices().size(); ++v)
    md << "- " << label(static_cast<int>(v)) << " = " << vec_md(e.polytope.vertices()[v]) << ", facets "
       << index_set_str(e.polytope.vertex_active(static_cast<int>(v))) << "\n";
  if (!e.annotations.empty()) {
    md << "\n## Annotations\n\n";
    for (const auto& [k, v] : e.annotations) md << "- " << k << ": " << v << "\n";
  }
  r.markdown = md.str();
  return r;
}

Report classify_report(const Instance& in) {
  const Polytope& p = in.polytope;
  Report r;
  bool simple = p.is_simple();
  bool rational = is_rational(p.h());
  auto qr = is_quasirational(p.h(), in.lattice);
  Json certs = Json::array();
  for (const auto& c : qr.certificates) {
    if (!c) {
      certs.push_back(nullptr);
      continue;
    }
    Json a = Json::array();
    for (const auto& x : *c) a.push_back(x.str());
    certs.push_back(a);
  }
  std::vector<int> fvec(static_cast<std::size_t>(p.dim()) + 1, 0);
  Json singular = Json::array();
  for (const auto& f : p.faces()) {
    if (f.dim >= 0 && f.dim < static_cast<int>(fvec.size())) fvec[static_cast<std::size_t>(f.dim)]++;
    if (f.kind == FaceKind::Singular) singular.push_back(face_json(f));
  }
  std::size_t sv = 0;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    if (p.vertex_active(v).size() > static_cast<std::size_t>(p.dim())) ++sv;
  r.json["input"] = instance_to_json(in);
  r.json["simple"] = simple;
  r.json["rational"] = rational;
  r.json["lattice_is_lattice"] = is_lattice(in.lattice);
  r.json["quasirational"] = qr.ok();
  r.json["certificates"] = certs;
  r.json["f_vector"] = fvec;
  r.json["singular_faces"] = singular;
  r.json["singular_vertices"] = sv;
  std::ostringstream md;
  md << "# Classification: " << in.name << "\n\n| property | value |\n|---|---|\n"
     << "| simple | " << bool_md(simple) << " |\n| rational | " << bool_md(rational) << " |\n"
     << "| quasilattice " << in.lattice.name() << " is a lattice | " << bool_md(is_lattice(in.lattice)) << " |\n"
     << "| quasirational | " << bool_md(qr.ok()) << " |\n| singular vertices | " << sv << " |\n| f-vector | ";
  for (std::size_t i = 0; i < fvec.size(); ++i) md << (i ? ", " : "") << fvec[i];
  md << " |\n";
  if (!qr.ok()) {
    md << "\nNormals outside the quasilattice: ";
    for (int j : qr.failures()) md << "X_" << j + 1 << " ";
    md << "\n";
  }
  r.markdown = md.str();
  return r;
}

Report delzant_report(const Instance& in) {
  DelzantInput di = make_input(in);
  DelzantData d = build(di);
  auto id = moment_polytope_identity(d.moment, di);
  Report r;
  r.json["input"] = instance_to_json(in);
  Json dz = delzant_json(di, d);
  for (auto it = dz.begin(); it != dz.end(); ++it) r.json[it.key()] = it.value();
  r.json["identity"] = {{"annihilates", id.annihilates},
                        {"injective", id.injective},
                        {"vertices_match", id.vertices_match},
                        {"basic_feasible_solutions", id.bfs_count}};
  std::ostringstream md;
  md << "# Delzant construction: " << in.name << "\n\n" << "𝔫 = ker π has dimension " << d.kernel.basis.rows()
     << "; N is " << (n_is_connected(di) ? "connected" : "disconnected") << ".\n\n## Level set Ψ⁻¹(0)\n\n"
     << system_md(d.moment) << "\n## Vertex patterns\n\n";
  for (std::size_t v = 0; v < d.model.vertex_patterns.size(); ++v)
    md << "- " << label(static_cast<int>(v)) << ": z_j = 0 for j ∈ " << index_set_str(d.model.vertex_patterns[v]) << "\n";
  md << "\nMoment polytope identity: " << (id.ok() ? "holds" : "FAILS") << " (" << id.bfs_count
     << " basic feasible solutions).\n";
  r.markdown = md.str();
  return r;
}

Report charts_report(const Instance& in, std::optional<int> vertex, std::optional<IndexSet> triple) {
  DelzantInput di = make_input(in);
  Report r;
  r.json["input"] = instance_to_json(in);
  std::ostringstream md;
  if (!vertex) {
    AtlasReport a = atlas_enumerate(di);
    Json charts = Json::array();
    for (const auto& c : a.charts) charts.push_back({{"vertex", c.vertex + 1}, {"triple", to_json(c.triple)}});
    Json chosen = Json::array();
    for (const auto& c : a.global_choice) chosen.push_back({{"vertex", c.vertex + 1}, {"triple", to_json(c.triple)}});
    r.json["charts"] = charts;
    r.json["patterns"] = a.patterns;
    r.json["local_cover"] = a.local_cover;
    r.json["global_cover"] = a.global_cover;
    r.json["global_choice"] = chosen;
    r.json["exact"] = a.exact;
    md << "# Atlas: " << in.name << "\n\n| quantity | value |\n|---|---|\n| admissible charts (ν, T) | " << a.charts.size()
       << " |\n| regular support patterns | " << a.patterns << " |\n| minimal cover, per vertex summed | " << a.local_cover
       << " |\n| minimal cover, global | " << a.global_cover << " |\n| covers proven minimal | " << bool_md(a.exact) << " |\n";
    r.markdown = md.str();
    return r;
  }
  IndexSet t = triple ? *triple : default_triple(di, *vertex);
  ChartGroup g = chart_group(di, t);
  DelzantData d = build(di);
  TauChart tau = tau_chart(di, d.moment, *vertex, t);
  Json gamma = Json::array();
  for (const auto& x : g.generators) gamma.push_back(to_json(x));
  Json forms = Json::array();
  Json domain = Json::array();
  for (const auto& [j, f] : tau.dependent) forms.push_back({{"index", j + 1}, {"form", form_json(f)}});
  for (const auto& dq : tau.domain) domain.push_back({{"form", form_json(dq.form)}, {"bound", dq.bound}, {"relation", ">"}});
  r.json["vertex"] = *vertex + 1;
  r.json["triple"] = to_json(g.triple);
  r.json["gamma"] = gamma;
  r.json["source_map"] = to_json(g.source_map);
  r.json["tau"] = forms;
  r.json["domain"] = domain;
  md << "# Chart at " << label(*vertex) << ", T = " << index_set_str(g.triple) << ": " << in.name << "\n\n## Γ\n\n";
  if (g.generators.empty()) md << "Γ is trivial.\n";
  for (const auto& x : g.generators) {
    md << "- exp(2πi·" << vec_md(x) << ")\n";
  }
  md << "\n## τ\n\n";
  for (const auto& [j, f] : tau.dependent) md << "- τ_" << j + 1 << "(u) = √(" << form_md(f) << ")\n";
  md << "\n## Domain U\n\n";
  for (const auto& dq : tau.domain) md << "- " << form_md(dq.form) << " > 0" << (dq.bound ? " (bound)" : "") << "\n";
  if (in.polytope.vertex_active(*vertex).size() > in.polytope.dim()) md << "- u_T ≠ 0\n";
  r.markdown = md.str();
  return r;
}

Report link_report(const Instance& in, int vertex, const PlaneOverride& o) {
  DelzantInput di = make_input(in);
  if (di.n() != 3) throw Error(ErrorCode::DimMismatch, "links are computed for 3-polytopes");
  if (std::find(singular_vertices(di.polytope).begin(), singular_vertices(di.polytope).end(), vertex) ==
      singular_vertices(di.polytope).end())
    throw Error(ErrorCode::InvalidArgument, label_ascii(vertex) + " is not a singular vertex");
  ConeModel c = cone_at_vertex(di, vertex);
  LinkModel l = link_at_vertex(di, vertex, o);
  FiberReport f = fiber_group(c, l);
  Report r;
  r.json["input"] = instance_to_json(in);
  r.json["vertex"] = vertex + 1;
  Json comps = Json::array();
  for (const auto& x : c.component_gens) comps.push_back(to_json(x));
  r.json["cone"] = {{"facets", to_json(c.active)}, {"kernel", to_json(c.kernel)}, {"component_gens", comps}};
  r.json["plane"] = {{"normal", to_json(l.plane.normal)},
                     {"offset", to_json(l.plane.offset)},
                     {"point", to_json(l.plane.point)},
                     {"basis", to_json(l.plane.plane_basis)}};
  Json hs = Json::array();
  for (std::size_t k = 0; k < l.facets.size(); ++k) {
    const auto& h = l.input.polytope.h().halfspaces[k];
    hs.push_back({{"facet", l.facets[k] + 1}, {"Y", to_json(h.normal)}, {"lambda", to_json(h.lambda)}});
  }
  Json verts = Json::array();
  for (const auto& v : l.input.polytope.vertices()) verts.push_back(to_json(v));
  Json numeric = Json::array();
  for (const auto& y : l.numeric_normals) numeric.push_back({y[0], y[1]});
  Json link_json = {{"halfspaces", hs}, {"vertices", verts}, {"lattice", quasilattice_to_json(l.input.lattice)},
                    {"delzant", delzant_json(l.input, l.data)}, {"frame_free_kernel", to_json(l.frame_free_kernel)},
                    {"numeric_normals", numeric}};
  r.json["link"] = link_json;
  r.json["fiber"] = fiber_json(f);

  std::ostringstream md;
  md << "# Link at " << label(vertex) << ": " << in.name << "\n\n"
     << "Cone facets " << index_set_str(c.active) << "; dim 𝔫(𝒞) = " << c.kernel.rows() << ".\n\n"
     << "Cutting plane ⟨μ, X_ν⟩ = " << l.plane.offset.pretty() << " with X_ν = " << vec_md(l.plane.normal)
     << ", ξ = " << vec_md(l.plane.point) << ".\n\n## Link polytope Δ_L (" << l.input.polytope.vertices().size()
     << " vertices)\n\n| facet | Y_j | λ_j | Y_j (orthonormal frame) |\n|---|---|---|---|\n";
  for (std::size_t k = 0; k < l.facets.size(); ++k) {
    const auto& h = l.input.polytope.h().halfspaces[k];
    std::ostringstream num;
    num.precision(6);
    num << "(" << l.numeric_normals[k][0] << ", " << l.numeric_normals[k][1] << ")";
    md << "| " << l.facets[k] + 1 << " | " << vec_md(h.normal) << " | " << h.lambda.pretty() << " | " << num.str() << " |\n";
  }
  md << "\n## Link level set\n\n" << system_md(l.data.moment)
     << "\n## Fibrations\n\n| map | fiber |\n|---|---|\n| p¹ | ℝ_{>0} |\n| p² | " << f.presentation << " |\n";
  if (f.rational_generator && f.phi_generator)
    md << "\nLayers: G ∩ ℚ = " << multiple_md(*f.rational_generator) << ", G ∩ ℚφ = " << multiple_md(*f.phi_generator)
       << ".\n";
  r.markdown = md.str();
  return r;
}

Report stratification_json_report(const Instance& in) {
  DelzantInput di = make_input(in);
  StratificationReport s = stratification_report(di);
  Report r;
  r.json["input"] = instance_to_json(in);
  r.json["regular_stratum"] = {{"dim", s.regular_dim}, {"kind", s.kind}};
  Json strata = Json::array();
  for (const auto& st : s.strata)
    strata.push_back({{"active", to_json(st.active)}, {"face_dim", st.face_dim}, {"stratum_dim", st.stratum_dim}, {"singular", st.singular}});
  r.json["strata"] = strata;
  Json sing = Json::array();
  std::ostringstream md;
  md << "# Stratification: " << in.name << "\n\nRegular stratum: dimension " << s.regular_dim << ", " << s.kind << ".\n\n"
     << "Singular points: " << s.singular.size() << ".\n\n";
  if (!s.singular.empty())
    md << "| vertex | facets | X_ν | link | fiber | |z_j|² at the point |\n|---|---|---|---|---|---|\n";
  for (const auto& v : s.singular) {
    Json comps = Json::array();
    for (const auto& x : v.cone.component_gens) comps.push_back(to_json(x));
    Json normals = Json::array();
    for (std::size_t k = 0; k < v.link_normals.size(); ++k)
      normals.push_back({{"Y", to_json(v.link_normals[k])}, {"lambda", to_json(v.link_lambdas[k])}});
    sing.push_back({{"vertex", v.vertex + 1},
                    {"cone", {{"facets", to_json(v.cone.active)}, {"kernel", to_json(v.cone.kernel)}, {"component_gens", comps}}},
                    {"plane", {{"normal", to_json(v.plane.normal)}, {"offset", to_json(v.plane.offset)}}},
                    {"link", {{"facets", to_json(v.link_facets)}, {"halfspaces", normals}, {"lattice", quasilattice_to_json(v.link_lattice)}}},
                    {"fiber", fiber_json(v.fiber)},
                    {"pairing", {{"symplectic", to_json(v.moment_coordinates)}, {"complex_zero_set", to_json(v.cone.active)}}}});
    md << "| " << label(v.vertex) << " | " << index_set_str(v.cone.active) << " | " << vec_md(v.plane.normal) << " | "
       << v.link_facets.size() << "-gon | " << v.fiber.presentation << " | " << vec_md(v.moment_coordinates) << " |\n";
  }
  r.json["singular_points"] = sing;
  Json groups = Json::array();
  for (const auto& [id, g] : s.simple_vertex_groups) {
    Json gens = Json::array();
    for (const auto& x : g.generators) gens.push_back(to_json(x));
    groups.push_back({{"vertex", id.vertex + 1}, {"triple", to_json(id.triple)}, {"gamma", gens}});
  }
  r.json["simple_vertex_groups"] = groups;
  r.markdown = md.str();
  return r;
}

Report checks_report(const std::string& title, const std::vector<std::pair<std::string, std::vector<Check>>>& groups) {
  Report r;
  bool all = true;
  Json arr = Json::array();
  std::ostringstream md;
  md << "# " << title << "\n\n";
  for (const auto& [name, checks] : groups) {
    bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    all = all && ok;
    Json cs = Json::array();
    md << "## " << name << ": " << (ok ? "PASS" : "FAIL") << "\n\n";
    for (const auto& c : checks) {
      cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      md << "- [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    md << "\n";
    arr.push_back({{"instance", name}, {"pass", ok}, {"checks", cs}});
  }
  md << "Summary: " << (all ? "PASS" : "FAIL") << "\n";
  r.json = {{"pass", all}, {"results", arr}};
  r.markdown = md.str();
  return r;
}

Report criteria_report(const std::vector<CriterionResult>& results) {
  Report r;
  Json arr = Json::array();
  std::ostringstream md;
  md << "# Acceptance criteria\n\n";
  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass();
    Json cs = Json::array();
    md << "- " << (c.pass() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
    for (const auto& k : c.checks) {
      cs.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
      md << "  - [" << (k.pass ? "ok" : "FAIL") << "] " << k.name << (k.detail.empty() ? "" : ": " + k.detail) << "\n";
    }
    arr.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", cs}});
  }
  r.json = {{"pass", all}, {"criteria", arr}};
  r.markdown = md.str();
  return r;
}

}  // namespace toricforge
