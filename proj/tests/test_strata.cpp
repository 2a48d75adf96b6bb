#include "doctest.h"
#include "helpers.hpp"

#include "toricforge/catalog.hpp"
#include "toricforge/error.hpp"
#include "toricforge/reference.hpp"
#include "toricforge/strata.hpp"

#include <cmath>
#include <functional>
#include <set>

using namespace toricforge;
using testing::ids;
using testing::phi;

namespace {

DelzantInput input_for(const std::string& name) {
  auto e = get_solid(name);
  return DelzantInput::make(e.polytope, e.lattice);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;
}

// Link polytope vertices lifted back into the ambient space.
std::vector<Vec> lifted_vertices(const LinkModel& l) {
  std::vector<Vec> out;
  for (const auto& y : l.input.polytope.vertices()) {
    Vec mu = l.plane.point;
    for (std::size_t k = 0; k < y.size(); ++k) mu = mu + y[k] * l.plane.plane_basis.row(k);
    out.push_back(mu);
  }
  return out;
}

bool same_point_set(std::vector<Vec> a, std::vector<Vec> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

PlaneOverride icosahedron_override() {
  PlaneOverride o;
  o.normal = reference::icosahedron_cut_normal();
  o.offset = reference::icosahedron_cut_offset();
  return o;
}

bool in_group(const RealSubgroup& g, const Scalar& t) {
  std::vector<Vec> gens;
  for (const auto& b : g.basis) gens.push_back({b});
  return t.is_zero() || (!gens.empty() && zspan_coefficients(gens, {t}).has_value());
}

bool same_group(const RealSubgroup& a, const RealSubgroup& b) {
  for (const auto& x : a.basis)
    if (!in_group(b, x)) return false;
  for (const auto& x : b.basis)
    if (!in_group(a, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("singular vertices") {
  CHECK(singular_vertices(input_for("octahedron").polytope).size() == 6);
  CHECK(singular_vertices(input_for("icosahedron").polytope).size() == 12);
  CHECK(singular_vertices(input_for("dodecahedron").polytope).empty());
  CHECK(singular_vertices(input_for("cube").polytope).empty());
}

TEST_CASE("cone models") {
  auto oct = input_for("octahedron");
  auto c = cone_at_vertex(oct, 0);
  CHECK(c.active == ids({3, 4, 5, 6}));
  REQUIRE(c.kernel.rows() == 1);
  CHECK(same_row_space(c.kernel, Matrix::from_rows({reference::octahedron_cone_kernel()})));
  CHECK(c.component_gens.empty());

  auto ico = input_for("icosahedron");
  int v = reference::icosahedron_link_vertex();
  auto ci = cone_at_vertex(ico, v);
  CHECK(ci.active == ids({5, 9, 12, 14, 18}));
  CHECK(same_row_space(ci.kernel, reference::icosahedron_cone_kernel()));
  CHECK(!ci.component_gens.empty());
  for (const auto& g : ci.component_gens) CHECK(member(ico.lattice, ci.pi * g).has_value());
  // the printed discrete part moves the second coordinate by 2 phi l
  CHECK(same_component_group(ci, {{0, Scalar(2) * phi(), 0, 0, 0}}));
  CHECK(!same_component_group(ci, {}));

  auto cube = input_for("cube");
  for (int u = 0; u < 8; ++u) CHECK(cone_at_vertex(cube, u).kernel.rows() == 0);

  // dim n(C) = |I| - 3 everywhere
  for (int u : singular_vertices(ico.polytope)) CHECK(cone_at_vertex(ico, u).kernel.rows() == 2);
  for (int u : singular_vertices(oct.polytope)) CHECK(cone_at_vertex(oct, u).kernel.rows() == 1);
}

TEST_CASE("default cutting planes") {
  auto oct = input_for("octahedron");
  for (int v : singular_vertices(oct.polytope)) {
    auto cp = cutting_plane(oct, v);
    const Vec& mu = oct.polytope.vertices()[static_cast<std::size_t>(v)];
    // x -> -x symmetry: the normal is twice the vertex
    CHECK(cp.normal == Scalar(2) * mu);
    CHECK(cp.offset == Scalar(1));
    CHECK(dot(cp.point, cp.normal) == cp.offset);
    CHECK(cp.adjacent_value < cp.offset);
    CHECK(cp.offset < cp.vertex_value);
    CHECK(member(oct.lattice, cp.normal).has_value());
  }
  auto ico = input_for("icosahedron");
  int v = reference::icosahedron_link_vertex();
  auto cp = cutting_plane(ico, v);
  CHECK(cp.normal == reference::icosahedron_cut_normal());
  CHECK(member(ico.lattice, cp.normal).has_value());
  // proportional to -sum X_j over the active facets
  Vec sum = zero_vec(3);
  for (int j : ico.polytope.vertex_active(v)) sum = sum - ico.polytope.normal(j);
  CHECK(rank(Matrix::from_rows({sum, cp.normal})) == 1);
  CHECK(same_row_space(cp.plane_basis, Matrix::from_rows({{phi(), 1, 0}, {0, 0, 1}})));
  for (int u : singular_vertices(ico.polytope)) {
    auto c = cutting_plane(ico, u);
    CHECK(member(ico.lattice, c.normal).has_value());
    CHECK(dot(c.normal, c.normal) == dot(cp.normal, cp.normal));
  }
}

TEST_CASE("cutting plane overrides") {
  auto ico = input_for("icosahedron");
  int v = reference::icosahedron_link_vertex();
  auto cp = cutting_plane(ico, v, icosahedron_override());
  CHECK(cp.point == reference::icosahedron_cut_point());
  CHECK(cp.offset == Scalar(2) / phi());
  CHECK(cp.adjacent_value == cp.offset);

  PlaneOverride bad = icosahedron_override();
  bad.offset = cp.vertex_value;
  CHECK(code_of([&] { cutting_plane(ico, v, bad); }) == ErrorCode::NoSeparation);
  bad.offset = Scalar(0);
  CHECK(code_of([&] { cutting_plane(ico, v, bad); }) == ErrorCode::NoSeparation);
  PlaneOverride tilted;
  tilted.normal = Vec{1, 0, 0};
  CHECK(code_of([&] { cutting_plane(ico, v, tilted); }) == ErrorCode::NoSeparation);
  PlaneOverride off_plane = icosahedron_override();
  off_plane.point = Vec{0, 0, 0};
  CHECK(code_of([&] { cutting_plane(ico, v, off_plane); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("octahedron link") {
  auto oct = input_for("octahedron");
  auto l = link_at_vertex(oct, 0);
  CHECK(l.input.polytope.vertices().size() == 4);
  CHECK(l.input.polytope.num_facets() == 4);
  CHECK(l.data.kernel.basis.rows() == 2);
  CHECK(same_row_space(l.data.kernel.basis, reference::octahedron_link_kernel()));
  CHECK(same_row_space(l.data.kernel.basis, l.frame_free_kernel));

  // cut through the yz-plane: the square with vertices (+-1, +-1) in the rotated frame
  PlaneOverride o;
  o.normal = Vec{1, 0, 0};
  o.offset = Scalar(0);
  o.plane_basis = Matrix::from_rows({{0, Scalar::fraction(1, 2), Scalar::fraction(-1, 2)},
                                     {0, Scalar::fraction(1, 2), Scalar::fraction(1, 2)}});
  auto sq = link_at_vertex(oct, 0, o);
  CHECK(same_point_set(lifted_vertices(sq), {{0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  CHECK(same_point_set(sq.input.polytope.vertices(), {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  for (const auto& hs : sq.input.polytope.h().halfspaces) {
    int nonzero = 0;
    for (const auto& x : hs.normal) nonzero += x.is_zero() ? 0 : 1;
    CHECK(nonzero == 1);
  }
  CHECK(is_lattice(sq.input.lattice));
  CHECK(same_quasilattice(sq.input.lattice, Quasilattice::standard(2)));
  CHECK(same_row_space(sq.data.kernel.basis, reference::octahedron_link_kernel()));
}

TEST_CASE("icosahedron link") {
  auto ico = input_for("icosahedron");
  int v = reference::icosahedron_link_vertex();
  auto l = link_at_vertex(ico, v, icosahedron_override());
  REQUIRE(l.input.polytope.vertices().size() == 5);
  auto lifted = lifted_vertices(l);
  std::vector<Vec> expected;
  for (int u : reference::icosahedron_pentagon()) expected.push_back(ico.polytope.vertices()[static_cast<std::size_t>(u)]);
  CHECK(same_point_set(lifted, expected));
  for (const auto& hs : l.input.polytope.h().halfspaces) CHECK(hs.lambda == reference::icosahedron_link_lambda());
  CHECK(same_row_space(l.data.kernel.basis, reference::icosahedron_link_kernel()));
  CHECK(same_row_space(l.data.kernel.basis, l.frame_free_kernel));
  auto sys = reference::icosahedron_link_system();
  CHECK(moment_system_matches(l.data.moment, sys.B, sys.c));

  // regular pentagon: equal squared edge lengths in Q(phi)
  const auto& p = l.input.polytope;
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < 5; ++a)
    for (int b : p.adjacent_vertices(a)) edges.insert({std::min(a, b), std::max(a, b)});
  REQUIRE(edges.size() == 5);
  std::optional<Scalar> len;
  for (auto [a, b] : edges) {
    Vec d = lifted[static_cast<std::size_t>(a)] - lifted[static_cast<std::size_t>(b)];
    if (!len) len = dot(d, d);
    CHECK(dot(d, d) == *len);
  }

  auto numeric = reference::icosahedron_link_normals_numeric();
  REQUIRE(l.numeric_normals.size() == numeric.size());
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    CHECK(std::abs(l.numeric_normals[i][0] - numeric[i][0]) < 1e-9);
    CHECK(std::abs(l.numeric_normals[i][1] - numeric[i][1]) < 1e-9);
  }

  // default plane: the same kernel, a different scale
  auto d = link_at_vertex(ico, v);
  CHECK(same_row_space(d.data.kernel.basis, l.data.kernel.basis));
  CHECK(same_quasilattice(d.input.lattice, l.input.lattice));
}

TEST_CASE("link kernels are frame independent") {
  for (const char* name : {"octahedron", "icosahedron"}) {
    auto in = input_for(name);
    for (int v : singular_vertices(in.polytope)) {
      auto l = link_at_vertex(in, v);
      CHECK(same_row_space(l.data.kernel.basis, l.frame_free_kernel));
      CHECK(l.input.polytope.num_facets() == in.polytope.vertex_active(v).size());
      CHECK(l.input.polytope.vertices().size() == in.polytope.vertex_active(v).size());
      CHECK(l.data.kernel.basis.rows() == in.polytope.vertex_active(v).size() - 2);
    }
  }
}

TEST_CASE("octahedron fiber") {
  auto oct = input_for("octahedron");
  auto c = cone_at_vertex(oct, 0);
  auto l = link_at_vertex(oct, 0);
  auto f = fiber_group(c, l);
  CHECK(f.group.kind == SubgroupKind::Discrete);
  CHECK(*f.group.generator == Scalar(1));
  auto g = fiber_group(c, l, Vec{1, 1, 1, 1});
  CHECK(g.group.kind == SubgroupKind::Discrete);
  CHECK(*g.group.generator == Scalar::fraction(1, 2));
  CHECK(code_of([&] { fiber_group(c, l, Vec{1, 1, -1, -1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { fiber_group(c, l, Vec{1, 0, 0, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("icosahedron fiber") {
  auto ico = input_for("icosahedron");
  int v = reference::icosahedron_link_vertex();
  auto c = cone_at_vertex(ico, v);
  auto l = link_at_vertex(ico, v, icosahedron_override());
  Vec r = reference::icosahedron_link_kernel().row(0);
  auto f = fiber_group(c, l, r);
  CHECK(f.group.kind == SubgroupKind::Dense);
  REQUIRE(f.rational_generator);
  REQUIRE(f.phi_generator);
  CHECK(*f.rational_generator == Scalar(1));
  CHECK(*f.phi_generator == reference::icosahedron_fiber_period());
  CHECK(in_group(f.group, Scalar(1)));
  CHECK(in_group(f.group, Scalar(2) * phi()));
  CHECK(!in_group(f.group, phi()));
  // without the extra components a discrete group remains
  CHECK(f.connected_group.kind == SubgroupKind::Discrete);

  // brute force: t r in n(C) + Z^5 + component span over a coefficient box
  Matrix constraints = l.plane.plane_basis * c.pi;
  const std::size_t nc = c.component_gens.size();
  std::vector<int> m(5 + nc, 0);
  std::vector<Scalar> found, found_connected;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      Vec x = zero_vec(5);
      bool connected = true;
      for (std::size_t j = 0; j < 5; ++j) x[j] = Scalar(m[j]);
      for (std::size_t j = 0; j < nc; ++j) {
        x = x + Scalar(m[5 + j]) * c.component_gens[j];
        connected = connected && m[5 + j] == 0;
      }
      if (!is_zero(constraints * x)) return;
      auto t = solve(Matrix::from_columns({c.pi * r}), c.pi * x);
      REQUIRE(t);
      found.push_back((*t)[0]);
      if (connected) found_connected.push_back((*t)[0]);
      return;
    }
    int range = i < 5 ? 2 : 1;
    for (int k = -range; k <= range; ++k) {
      m[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  auto smallest_positive = [](const std::vector<Scalar>& ts) {
    std::optional<Scalar> best;
    for (const auto& t : ts)
      if (t > Scalar(0) && (!best || t < *best)) best = t;
    return best;
  };
  bool saw_one = false, saw_two_phi = false;
  for (const auto& t : found) {
    CHECK(in_group(f.group, t));
    saw_one = saw_one || t == Scalar(1);
    saw_two_phi = saw_two_phi || t == Scalar(2) * phi();
  }
  for (const auto& t : found_connected) CHECK(in_group(f.connected_group, t));
  CHECK(saw_one);
  CHECK(saw_two_phi);
  REQUIRE(smallest_positive(found_connected));
  CHECK(*smallest_positive(found_connected) == *f.connected_group.generator);
}

TEST_CASE("fiber invariance under the choice of w") {
  auto ico = input_for("icosahedron");
  int v = reference::icosahedron_link_vertex();
  auto c = cone_at_vertex(ico, v);
  auto l = link_at_vertex(ico, v);
  Vec r = reference::icosahedron_link_kernel().row(0);
  auto base = fiber_group(c, l, r);
  auto shifted = fiber_group(c, l, r + Scalar(3) * c.kernel.row(0) - phi() * c.kernel.row(1));
  CHECK(same_group(base.group, shifted.group));
  auto scaled = fiber_group(c, l, Scalar(2) * r);
  CHECK(scaled.group.kind == base.group.kind);
  RealSubgroup halved = base.group;
  for (auto& b : halved.basis) b = b / Scalar(2);
  CHECK(same_group(scaled.group, halved));
  auto deflt = fiber_group(c, l);
  CHECK(deflt.group.kind == SubgroupKind::Dense);
  REQUIRE(deflt.phi_generator);
  CHECK(*deflt.phi_generator == Scalar(2) * phi());
  CHECK(*deflt.rational_generator == Scalar(1));
  CHECK(deflt.presentation == "R/(Z + 2φZ) (quasicircle)");

  auto oct = input_for("octahedron");
  auto co = cone_at_vertex(oct, 0);
  auto lo = link_at_vertex(oct, 0);
  Vec w{1, 1, 1, 1};
  auto a = fiber_group(co, lo, w);
  auto b = fiber_group(co, lo, w + co.kernel.row(0));
  CHECK(same_group(a.group, b.group));
  for (int u : singular_vertices(oct.polytope)) {
    auto f = fiber_group(cone_at_vertex(oct, u), link_at_vertex(oct, u));
    CHECK(f.group.kind == SubgroupKind::Discrete);
  }
}

TEST_CASE("stratification reports") {
  auto oct = stratification_report(input_for("octahedron"));
  CHECK(oct.kind == "manifold");
  CHECK(oct.regular_dim == 6);
  CHECK(oct.singular.size() == 6);
  for (const auto& s : oct.singular) {
    CHECK(s.fiber.group.kind == SubgroupKind::Discrete);
    for (std::size_t j = 0; j < s.moment_coordinates.size(); ++j) {
      bool active = std::binary_search(s.cone.active.begin(), s.cone.active.end(), static_cast<int>(j));
      CHECK(s.moment_coordinates[j].is_zero() == active);
    }
  }
  auto ico = stratification_report(input_for("icosahedron"));
  CHECK(ico.kind == "quasifold");
  CHECK(ico.singular.size() == 12);
  for (const auto& s : ico.singular) CHECK(s.fiber.group.kind == SubgroupKind::Dense);
  auto dod = stratification_report(input_for("dodecahedron"));
  CHECK(dod.kind == "quasifold");
  CHECK(dod.singular.empty());
  CHECK(dod.simple_vertex_groups.size() == 20);
  CHECK(stratification_report(input_for("cube")).kind == "manifold");
  std::size_t singular_strata = 0;
  for (const auto& s : oct.strata) singular_strata += s.singular ? 1 : 0;
  CHECK(singular_strata == 6);
}
