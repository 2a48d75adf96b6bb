#include "doctest.h"
#include "helpers.hpp"

#include "toricforge/catalog.hpp"
#include "toricforge/delzant.hpp"
#include "toricforge/error.hpp"
#include "toricforge/reference.hpp"

#include <random>

using namespace toricforge;
using testing::ids;
using testing::phi;

namespace {

DelzantInput input_for(const std::string& name, const Scalar& scale = Scalar(1)) {
  auto e = get_solid(name, scale);
  return DelzantInput::make(e.polytope, e.lattice);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("kernel dimensions") {
  std::map<std::string, std::size_t> dims{
      {"tetrahedron", 1}, {"cube", 3}, {"octahedron", 5}, {"dodecahedron", 9}, {"icosahedron", 17}};
  for (const auto& [name, k] : dims) {
    auto in = input_for(name);
    auto data = build(in);
    CHECK(data.kernel.basis.rows() == k);
    CHECK((data.kernel.pi * data.kernel.basis.transpose()).is_zero());
    CHECK(rank(data.kernel.pi) == 3);
    CHECK(rank(data.kernel.basis) == k);
    // c = -B lambda with every lambda_j = -1: row sums
    for (std::size_t i = 0; i < k; ++i) {
      Scalar sum = 0;
      for (std::size_t j = 0; j < data.moment.B.cols(); ++j) sum = sum + data.moment.B(i, j);
      CHECK(data.moment.c[i] == sum);
    }
  }
}

TEST_CASE("moment systems match the published equations") {
  for (const auto& name : solid_names()) {
    auto data = build(input_for(name));
    auto ref = reference::moment_system(name);
    CHECK_MESSAGE(moment_system_matches(data.moment, ref.B, ref.c), name);
  }
  auto data = build(input_for("tetrahedron"));
  CHECK(data.moment.B == Matrix::from_rows({{1, 1, 1, 1}}));
  CHECK(data.moment.c == Vec{4});
  // a wrong right-hand side is detected
  auto ref = reference::moment_system("octahedron");
  ref.c[4] = 1;
  CHECK_FALSE(moment_system_matches(build(input_for("octahedron")).moment, ref.B, ref.c));
}

TEST_CASE("kernel presentations") {
  CHECK(kernel_presentation_matches(build(input_for("dodecahedron")).kernel, reference::kernel_rows("dodecahedron")));
  auto k = build(input_for("icosahedron")).kernel;
  CHECK(kernel_presentation_matches(k, reference::kernel_rows("icosahedron")));
  Matrix padded = k.basis;
  padded.append_row(zero_vec(20));
  CHECK(kernel_presentation_matches(k, padded));
  Matrix short_rows(0, 20);
  for (std::size_t i = 0; i < 16; ++i) short_rows.append_row(k.basis.row(i));
  CHECK_FALSE(kernel_presentation_matches(k, short_rows));
}

TEST_CASE("quasirationality is enforced") {
  auto dod = get_solid("dodecahedron");
  CHECK(code_of([&] { DelzantInput::make(dod.polytope, Quasilattice::standard(3)); }) == ErrorCode::NotQuasirational);
}

TEST_CASE("connectedness of N") {
  CHECK(n_is_connected(input_for("icosahedron")));
  CHECK(n_is_connected(input_for("octahedron")));
  CHECK(n_is_connected(input_for("dodecahedron")));
  HPolytope sq{2, {{{2, 0}, 0}, {{-2, 0}, -2}, {{0, 1}, 0}, {{0, -1}, -1}}};
  auto in = DelzantInput::make(Polytope(sq), Quasilattice::standard(2));
  CHECK_FALSE(n_is_connected(in));
  // index 2 sublattice, by the HNF of the normals
  CHECK(*lattice_index_in_standard(Quasilattice({{2, 0}, {-2, 0}, {0, 1}, {0, -1}})) == 2);
}

TEST_CASE("linear relations") {
  auto v = icosahedral_vectors();
  std::vector<Vec> mid{v[3], v[4], v[5]};
  CHECK(relation_check({v[0], v[1], v[2]}, reference::icosahedral_relation_a(), mid));
  CHECK(relation_check({v[7], v[8], v[9]}, reference::icosahedral_relation_b(), mid));
  auto y = tetrahedral_vectors();
  CHECK(relation_check({y[3]}, Matrix::from_rows({{-1, -1, -1}}), {y[0], y[1], y[2]}));
  CHECK_FALSE(relation_check({y[3]}, Matrix::from_rows({{-1, -1, 1}}), {y[0], y[1], y[2]}));
}

TEST_CASE("closed orbits") {
  auto in = input_for("octahedron");
  auto data = build(in);
  const auto& faces = in.polytope.faces();
  CHECK_FALSE(orbit_is_closed(data.model, faces, ids({4, 5, 6})));
  CHECK(orbit_is_closed(data.model, faces, {}));
  CHECK(orbit_is_closed(data.model, faces, ids({3, 4, 5, 6})));
  CHECK(code_of([&] { orbit_is_closed(data.model, faces, ids({1, 5})); }) == ErrorCode::NotInModel);
  const Face& limit = closed_orbit_in_closure(in.polytope, data.model, ids({4, 5, 6}));
  CHECK(limit.active == ids({3, 4, 5, 6}));
  CHECK(limit.vertex_ids == std::vector<int>{0});
  const Face& same = closed_orbit_in_closure(in.polytope, data.model, ids({3, 6}));
  CHECK(same.active == ids({3, 6}));

  // icosahedron: facets 5 and 9 meet in the edge nu4 nu11 (oracle: scan the vertex table)
  auto ico = input_for("icosahedron");
  auto idata = build(ico);
  auto table = reference::vertex_table("icosahedron");
  std::vector<int> containing;
  for (int v = 0; v < 12; ++v) {
    const auto& t = table[static_cast<std::size_t>(v)];
    if (std::find(t.begin(), t.end(), 4) != t.end() && std::find(t.begin(), t.end(), 8) != t.end())
      containing.push_back(v);
  }
  const Face& f = closed_orbit_in_closure(ico.polytope, idata.model, ids({5, 9}));
  CHECK(f.vertex_ids == containing);
}

TEST_CASE("closed orbits correspond to faces") {
  for (const auto& name : solid_names()) {
    auto in = input_for(name);
    auto data = build(in);
    const auto& faces = in.polytope.faces();
    std::set<IndexSet> patterns;
    for (const auto& pat : data.model.vertex_patterns) {
      int k = static_cast<int>(pat.size());
      for (int mask = 0; mask < (1 << k); ++mask) {
        IndexSet j;
        for (int b = 0; b < k; ++b)
          if (mask & (1 << b)) j.push_back(pat[static_cast<std::size_t>(b)]);
        patterns.insert(j);
      }
    }
    std::size_t closed = 0;
    for (const auto& j : patterns) {
      bool c = orbit_is_closed(data.model, faces, j);
      CHECK(c == (in.polytope.face_from_active_set(j).active == j));
      if (c) ++closed;
    }
    CHECK(closed == faces.size());
  }
}

TEST_CASE("isotropy algebras") {
  auto in = input_for("octahedron");
  auto data = build(in);
  const Face& v1 = in.polytope.vertex_face(0);
  Matrix iso = isotropy_algebra(data.kernel, v1);
  REQUIRE(iso.rows() == 1);
  // supported on I = {3,4,5,6}, of the form (0,0,t,t,-t,-t,0,0)
  CHECK(same_row_space(iso, Matrix::from_rows({{0, 0, 1, 1, -1, -1, 0, 0}})));
  CHECK_FALSE(in_row_space(iso, reference::octahedron_isotropy_as_printed()));
  // the printed vector is in the kernel but moves z7, z8 which are nonzero on this orbit
  CHECK(in_row_space(data.kernel.basis, reference::octahedron_isotropy_as_printed()));

  auto ico = input_for("icosahedron");
  auto idata = build(ico);
  const Face& nu4 = ico.polytope.vertex_face(3);
  Matrix iso4 = isotropy_algebra(idata.kernel, nu4);
  REQUIRE(iso4.rows() == 2);
  Matrix local = iso4.select_columns(nu4.active);
  CHECK(same_row_space(local, reference::icosahedron_cone_kernel()));

  for (const auto& name : solid_names()) {
    auto s = input_for(name);
    auto sd = build(s);
    for (const auto& f : s.polytope.faces()) {
      std::size_t dim = isotropy_algebra(sd.kernel, f).rows();
      CHECK(static_cast<int>(dim) == static_cast<int>(f.rank()) - (3 - f.dim));
      CHECK((dim > 0) == (f.kind == FaceKind::Singular));
    }
  }
}

TEST_CASE("moment polytope identity") {
  for (const auto& name : solid_names()) {
    auto in = input_for(name);
    auto r = moment_polytope_identity(build(in).moment, in);
    CHECK_MESSAGE(r.ok(), name);
    CHECK(r.bfs_count == in.polytope.vertices().size());
  }
  auto cube = input_for("cube", Scalar(5));
  auto data = build(cube);
  CHECK(moment_polytope_identity(data.moment, cube).ok());
  CHECK(data.moment.c == Vec{10, 10, 10});
  auto oct = input_for("octahedron");
  CHECK(moment_coordinates(oct.polytope, {1, 0, 0}) == Vec{2, 2, 0, 0, 0, 0, 2, 2});

  // a perturbed right-hand side breaks the vertex correspondence
  auto tdata = build(input_for("tetrahedron"));
  tdata.moment.c[0] = 5;
  CHECK_FALSE(moment_polytope_identity(tdata.moment, input_for("tetrahedron")).vertices_match);
}

TEST_CASE("level set sampling") {
  auto dod = input_for("dodecahedron");
  auto ddata = build(dod);
  auto s = sample_level_set(ddata.moment, dod, {0, 0, 0});
  for (double x : s.s) CHECK(x == doctest::Approx(1.0));
  CHECK(s.max_residual < 1e-9);
  auto oct = input_for("octahedron");
  auto odata = build(oct);
  CHECK(sample_level_set(odata.moment, oct, {1, 0, 0}, {0.3, 1.1, 0, 0, 0, 0, 2.0, -0.7}).max_residual < 1e-9);
  CHECK(code_of([&] { sample_level_set(odata.moment, oct, {2, 0, 0}); }) == ErrorCode::OutOfPolytope);

  auto ico = input_for("icosahedron");
  auto idata = build(ico);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> w(1, 50);
  for (int t = 0; t < 20; ++t) {
    Vec mu = zero_vec(3);
    Scalar total = 0;
    for (const auto& v : ico.polytope.vertices()) {
      Scalar c = w(rng);
      mu = mu + c * v;
      total = total + c;
    }
    mu = (Scalar(1) / total) * mu;
    for (int bits : {53, 113, 300}) {
      auto r = sample_level_set(idata.moment, ico, mu, {}, bits);
      CHECK(r.max_residual < 1e-9);
      CHECK(r.precision == bits);
    }
  }
  CHECK(sample_level_set(idata.moment, ico, zero_vec(3), {}, 300).max_residual < 1e-60);
}
