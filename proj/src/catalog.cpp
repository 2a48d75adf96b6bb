#include "toricforge/catalog.hpp"

#include "toricforge/error.hpp"

#include <algorithm>

namespace toricforge {

namespace {

const Scalar kPhi = Scalar::phi();
const Scalar kInvPhi = Scalar::phi() - 1;         // 1/phi
const Scalar kInvPhi2 = Scalar(2) - Scalar::phi();  // 1/phi^2

Vec neg(const Vec& v) { return Scalar(-1) * v; }

HPolytope symmetric_facets(const std::vector<Vec>& normals, const Scalar& scale) {
  HPolytope h{3, {}};
  for (const auto& x : normals) h.halfspaces.push_back({x, -scale});
  return h;
}

std::vector<Vec> scaled(const std::vector<Vec>& vs, const Scalar& s) {
  std::vector<Vec> out;
  for (const auto& v : vs) out.push_back(s * v);
  return out;
}

std::vector<Vec> sign_patterns(const Scalar& x, const Scalar& y, const Scalar& z) {
  // Coordinates with zero entries are not repeated.
  std::vector<Vec> out;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        if ((x.is_zero() && sx < 0) || (y.is_zero() && sy < 0) || (z.is_zero() && sz < 0)) continue;
        out.push_back({Scalar(sx) * x, Scalar(sy) * y, Scalar(sz) * z});
      }
  return out;
}

SolidEntry tetrahedron(const Scalar& s) {
  auto y = tetrahedral_vectors();
  SolidEntry e{"tetrahedron", Polytope(symmetric_facets(y, s), scaled(y, s)), named_quasilattice("L"), true, true, {}};
  e.annotations = {{"M", "S^7/S^1"}, {"X", "CP^3"}, {"N", "S^1"}};
  return e;
}

SolidEntry cube(const Scalar& s) {
  std::vector<Vec> normals;
  for (std::size_t i = 0; i < 3; ++i) {
    normals.push_back(unit_vec(3, i));
    normals.push_back(neg(unit_vec(3, i)));
  }
  SolidEntry e{"cube", Polytope(symmetric_facets(normals, s), sign_patterns(s, s, s)), named_quasilattice("Z3"),
               true, true, {}};
  e.annotations = {{"M", "S^2 x S^2 x S^2"}, {"X", "CP^1 x CP^1 x CP^1"}, {"N", "T^3"}};
  return e;
}

SolidEntry octahedron(const Scalar& s) {
  auto y = tetrahedral_vectors();
  std::vector<Vec> normals = y;
  for (const auto& v : y) normals.push_back(neg(v));
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < 3; ++i) {
    verts.push_back(s * unit_vec(3, i));
    verts.push_back(neg(s * unit_vec(3, i)));
  }
  SolidEntry e{"octahedron", Polytope(symmetric_facets(normals, s), verts), named_quasilattice("L"), false, true, {}};
  e.annotations = {{"regular stratum", "manifold"},
                   {"real link", "(S^3 x S^3)/S^1"},
                   {"symplectic link", "S^2 x S^2"},
                   {"complex link", "CP^1 x CP^1"},
                   {"p1 fiber", "R_{>0}"}};
  return e;
}

SolidEntry dodecahedron(const Scalar& s) {
  auto y = dodecahedral_vectors();
  std::vector<Vec> normals = y;
  for (const auto& v : y) normals.push_back(neg(v));
  std::vector<Vec> verts = sign_patterns(1, 1, 1);
  for (const auto& v : sign_patterns(0, kPhi, kInvPhi)) verts.push_back(v);
  for (const auto& v : sign_patterns(kInvPhi, 0, kPhi)) verts.push_back(v);
  for (const auto& v : sign_patterns(kPhi, kInvPhi, 0)) verts.push_back(v);
  SolidEntry e{"dodecahedron", Polytope(symmetric_facets(normals, s), scaled(verts, s)), named_quasilattice("P"),
               true, false, {}};
  e.annotations = {{"M", "symplectic toric quasifold"}, {"X", "complex toric quasifold"}};
  return e;
}

SolidEntry icosahedron(const Scalar& s) {
  auto v = icosahedral_vectors();
  std::vector<Vec> normals = v;
  for (const auto& x : v) normals.push_back(neg(x));
  auto y = dodecahedral_vectors();
  std::vector<Vec> verts = y;
  for (const auto& x : y) verts.push_back(neg(x));
  SolidEntry e{"icosahedron", Polytope(symmetric_facets(normals, s), scaled(verts, s)), named_quasilattice("B"),
               false, false, {}};
  e.annotations = {{"regular stratum", "quasifold"}, {"fiber", "quasitorus R/2phiZ"}};
  return e;
}

}  // namespace

const std::vector<std::string>& solid_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

std::vector<Vec> tetrahedral_vectors() {
  return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

std::vector<Vec> dodecahedral_vectors() {
  return {{kInvPhi2, kInvPhi, 0}, {0, kInvPhi2, kInvPhi}, {kInvPhi, 0, kInvPhi2},
          {-kInvPhi2, kInvPhi, 0}, {0, -kInvPhi2, kInvPhi}, {kInvPhi, 0, -kInvPhi2}};
}

std::vector<Vec> icosahedral_vectors() {
  return {{kPhi, kInvPhi, 0}, {0, kPhi, kInvPhi}, {kInvPhi, 0, kPhi}, {-kPhi, kInvPhi, 0}, {0, -kPhi, kInvPhi},
          {kInvPhi, 0, -kPhi}, {1, 1, 1},       {-1, 1, 1},        {1, -1, 1},         {1, 1, -1}};
}

Quasilattice named_quasilattice(const std::string& name) {
  if (name == "Z3") return Quasilattice::standard(3);
  if (name == "L") return Quasilattice(tetrahedral_vectors(), "L");
  if (name == "P") return Quasilattice(dodecahedral_vectors(), "P");
  if (name == "B") {
    auto v = icosahedral_vectors();
    v.resize(6);
    return Quasilattice(v, "B");
  }
  throw Error(ErrorCode::UnknownSolid, "unknown quasilattice '" + name + "'");
}

SolidEntry get_solid(const std::string& name, const Scalar& scale) {
  if (scale.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  if (name == "tetrahedron") return tetrahedron(scale);
  if (name == "cube") return cube(scale);
  if (name == "octahedron") return octahedron(scale);
  if (name == "dodecahedron") return dodecahedron(scale);
  if (name == "icosahedron") return icosahedron(scale);
  throw Error(ErrorCode::UnknownSolid, "unknown solid '" + name + "'");
}

DualityCheck duality_check() {
  DualityCheck r;
  auto dodeca = get_solid("dodecahedron");
  auto icosa = get_solid("icosahedron");
  auto tetra = get_solid("tetrahedron");
  auto same_set = [](std::vector<Vec> a, std::vector<Vec> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
  };
  std::vector<Vec> dn;
  for (const auto& hs : dodeca.polytope.h().halfspaces) dn.push_back(hs.normal);
  r.dodecahedron_normals_are_icosahedron_vertices = same_set(dn, icosa.polytope.vertices());

  bool all = true;
  for (const auto& hs : icosa.polytope.h().halfspaces) {
    bool found = false;
    for (const auto& v : dodeca.polytope.vertices()) {
      // positive multiple: rank one and same orientation
      Matrix m = Matrix::from_rows({hs.normal, v});
      if (rank(m) == 1 && dot(hs.normal, v).sign() > 0) found = true;
    }
    all = all && found;
  }
  r.icosahedron_normals_along_dodecahedron_vertices = all;

  std::vector<Vec> tn;
  for (const auto& hs : tetra.polytope.h().halfspaces) tn.push_back(hs.normal);
  r.tetrahedron_normals_are_vertices = same_set(tn, tetra.polytope.vertices());
  return r;
}

}  // namespace toricforge
