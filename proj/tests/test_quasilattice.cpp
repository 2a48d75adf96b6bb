#include "doctest.h"
#include "helpers.hpp"

#include "toricforge/catalog.hpp"
#include "toricforge/error.hpp"
#include "toricforge/quasilattice.hpp"

#include <random>

using namespace toricforge;
using testing::phi;

namespace {

// Independent oracle: a Z-basis of the quasilattice, read off as rational
// coordinates; v is a member iff its coordinates in that basis are integers.
bool basis_oracle(const std::vector<Vec>& basis, const Vec& v, bool rationalized) {
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    if (!rationalized) {
      cols.push_back(b);
      continue;
    }
    Vec r;
    for (const auto& x : rationalize(b)) r.push_back(Scalar(x));
    cols.push_back(r);
  }
  Vec target = v;
  if (rationalized) {
    target.clear();
    for (const auto& x : rationalize(v)) target.push_back(Scalar(x));
  }
  if (!rationalized)
    for (const auto& x : v)
      if (!x.is_rational()) return false;
  Matrix m = Matrix::from_columns(cols);
  if (m.rows() != m.cols()) return false;
  auto sol = solve(m, target);
  if (!sol) return false;
  for (const auto& x : *sol)
    if (!x.is_integer()) return false;
  return true;
}

Vec combine(const std::vector<Vec>& gens, const std::vector<Scalar>& c) {
  Vec v = zero_vec(gens.front().size());
  for (std::size_t i = 0; i < gens.size(); ++i) v = v + c[i] * gens[i];
  return v;
}

}  // namespace

TEST_CASE("membership examples") {
  auto b = named_quasilattice("B");
  auto cert = member(b, {1, 1, 1});
  REQUIRE(cert);
  CHECK(*cert == IntVec{0, 0, 0, -1, -1, -1});
  CHECK(verify_certificate(b, {1, 1, 1}, *cert));
  for (const auto& name : {"Z3", "L", "P", "B"}) {
    auto q = named_quasilattice(name);
    auto z = member(q, zero_vec(3));
    REQUIRE(z);
    for (const auto& c : *z) CHECK(c == 0);
  }
  CHECK_FALSE(member(Quasilattice::standard(3), {Scalar::fraction(1, 2), 0, 0}));
  CHECK_FALSE(member(Quasilattice::standard(3), {phi(), 0, 0}));
  CHECK_FALSE(member(named_quasilattice("L"), {1, 0, 0}));
  CHECK(member(named_quasilattice("L"), {2, 0, 0}));
  CHECK_FALSE(verify_certificate(b, {1, 1, 1}, IntVec{0, 0, 0, 1, 1, 1}));
}

TEST_CASE("membership agrees with a basis oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> coin(0, 3);
  // Z-bases: L via Y1..Y3; P and B have Z-independent generators.
  struct Case {
    const char* name;
    std::vector<Vec> basis;
    bool rationalized;
  };
  auto y = tetrahedral_vectors();
  std::vector<Case> cases{{"Z3", {unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)}, false},
                          {"L", {y[0], y[1], y[2]}, false},
                          {"P", named_quasilattice("P").generators(), true},
                          {"B", named_quasilattice("B").generators(), true}};
  std::vector<Vec> perturb{{Scalar::fraction(1, 2), 0, 0}, {0, phi(), 0}, {0, 0, Scalar::fraction(1, 3)},
                           {1, 0, 0}, {Scalar::fraction(1, 2), Scalar::fraction(1, 2), 0}};
  for (const auto& c : cases) {
    auto q = named_quasilattice(c.name);
    const auto& gens = q.generators();
    int members = 0;
    for (int t = 0; t < 300; ++t) {
      std::vector<Scalar> k;
      for (std::size_t i = 0; i < gens.size(); ++i) k.push_back(coef(rng));
      Vec v = combine(gens, k);
      int p = coin(rng);
      if (p > 0) v = v + perturb[static_cast<std::size_t>(t) % perturb.size()];
      auto cert = member(q, v);
      bool expected = basis_oracle(c.basis, v, c.rationalized);
      CHECK_MESSAGE(cert.has_value() == expected, c.name);
      if (cert) {
        CHECK(verify_certificate(q, v, *cert));
        ++members;
      }
      if (p == 0) CHECK(cert.has_value());
    }
    CHECK(members > 0);
  }
}

TEST_CASE("lattice detection") {
  CHECK(is_lattice(Quasilattice::standard(3)));
  CHECK(is_lattice(named_quasilattice("L")));
  CHECK_FALSE(is_lattice(named_quasilattice("P")));
  CHECK_FALSE(is_lattice(named_quasilattice("B")));
  CHECK(zspan_rank(named_quasilattice("P").generators()) == 6);
  CHECK(zspan_rank(named_quasilattice("B").generators()) == 6);
  CHECK(is_lattice(Quasilattice({{phi(), 0}, {0, phi()}})));
}

TEST_CASE("index of L") {
  auto y = tetrahedral_vectors();
  CHECK(determinant(Matrix::from_rows({y[0], y[1], y[2]})).abs() == Scalar(4));
  auto idx = lattice_index_in_standard(named_quasilattice("L"));
  REQUIRE(idx);
  CHECK(*idx == 4);
  CHECK(*lattice_index_in_standard(Quasilattice::standard(3)) == 1);
  CHECK_FALSE(lattice_index_in_standard(named_quasilattice("B")));
}

TEST_CASE("quasilattice equality") {
  auto ico = get_solid("icosahedron");
  std::vector<Vec> normals;
  for (const auto& hs : ico.polytope.h().halfspaces) normals.push_back(hs.normal);
  CHECK(same_quasilattice(Quasilattice(normals), named_quasilattice("B")));
  auto y = tetrahedral_vectors();
  CHECK(same_quasilattice(Quasilattice({y[0], y[1], y[2]}), named_quasilattice("L")));
  CHECK_FALSE(same_quasilattice(Quasilattice({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Quasilattice::standard(3)));
  // With these generators the two modules coincide: V1 = Y1 + Y3 + Y6.
  CHECK(same_quasilattice(named_quasilattice("P"), named_quasilattice("B")));
  auto dy = dodecahedral_vectors();
  CHECK(dy[0] + dy[2] + dy[5] == icosahedral_vectors()[0]);

  // Shuffles and unimodular recombinations stay equal.
  std::mt19937_64 rng(3);
  for (const auto& name : {"L", "P", "B"}) {
    auto g = named_quasilattice(name).generators();
    for (int t = 0; t < 10; ++t) {
      std::shuffle(g.begin(), g.end(), rng);
      std::uniform_int_distribution<int> k(-3, 3);
      g[0] = g[0] + Scalar(k(rng)) * g[1];
      g[2] = g[2] - Scalar(k(rng)) * g[0];
      CHECK(same_quasilattice(Quasilattice(g), named_quasilattice(name)));
      CHECK(same_quasilattice(named_quasilattice(name), Quasilattice(g)));
    }
  }
}

TEST_CASE("quasirationality of the catalog") {
  auto dod = get_solid("dodecahedron");
  CHECK(is_quasirational(dod.polytope.h(), named_quasilattice("P")).ok());
  auto bad = is_quasirational(dod.polytope.h(), Quasilattice::standard(3));
  CHECK_FALSE(bad.ok());
  CHECK(bad.failures().size() == 12);
  CHECK(is_quasirational(get_solid("icosahedron").polytope.h(), named_quasilattice("B")).ok());
  for (const auto& name : solid_names()) {
    auto e = get_solid(name);
    auto r = is_quasirational(e.polytope.h(), e.lattice);
    CHECK(r.ok());
    for (std::size_t j = 0; j < r.certificates.size(); ++j)
      CHECK(verify_certificate(e.lattice, e.polytope.normal(static_cast<int>(j)), *r.certificates[j]));
  }
}

TEST_CASE("projection") {
  auto q = project(Quasilattice::standard(2), Matrix::from_rows({{1, 0}}), {0, 1});
  REQUIRE(q.generators().size() == 1);
  CHECK(q.generators()[0] == Vec{1});
  auto r = project(Quasilattice({{1, 0}, {0, 1}, {1, phi()}}), Matrix::from_rows({{1, 0}}), {0, 1});
  REQUIRE(r.generators().size() == 2);
  CHECK(r.generators()[0] == Vec{1});
  CHECK(r.generators()[1] == Vec{1});
  CHECK(same_quasilattice(r, Quasilattice::standard(1)));
  bool threw = false;
  try {
    project(Quasilattice::standard(2), Matrix::from_rows({{1, 0}}), {2, 0});
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::Degenerate;
  }
  CHECK(threw);

  // B along X_nu4 = 2(-1, phi, 0) onto its orthogonal plane: six nonzero images
  // whose Z-span has rank four over Q.
  Vec x{-2, Scalar(2) * phi(), 0};
  Matrix plane = kernel_basis(Matrix::from_rows({x}));
  auto bl = project(named_quasilattice("B"), plane, x);
  CHECK(bl.dim() == 2);
  CHECK(bl.generators().size() == 6);
  CHECK(zspan_rank(bl.generators()) == 4);
}
