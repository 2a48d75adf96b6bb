#include "toricforge/strata.hpp"

#include "toricforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace toricforge {

std::vector<int> singular_vertices(const Polytope& p) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    if (p.vertex_active(v).size() > static_cast<std::size_t>(p.dim())) out.push_back(v);
  return out;
}

namespace {

Matrix cone_matrix(const DelzantInput& input, const IndexSet& ids) {
  std::vector<Vec> cols;
  for (int j : ids) cols.push_back(input.polytope.normal(j));
  return Matrix::from_columns(cols, input.n());
}

void check_vertex(const DelzantInput& input, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(input.polytope.vertices().size()))
    throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
}

// Trace of x in Q(phi): Tr(a + b phi) = 2a + b.
Rational trace(const Scalar& x) { return Rational(2) * x.rational_part() + x.phi_part(); }

Integer round_rational(const Rational& r) {
  Scalar half = Scalar(r) + Scalar::fraction(1, 2);
  return half.floor();
}

// Shortest positive element of a rank-2 subgroup of Q(phi) for the form
// Tr(m^2 a); ties go to the larger real value.
Scalar minkowski_shortest(Scalar k1, Scalar k2, const Scalar& a) {
  auto form = [&](const Scalar& x, const Scalar& y) { return trace(x * y * a); };
  for (int guard = 0; guard < 1000; ++guard) {
    if (form(k1, k1) > form(k2, k2)) std::swap(k1, k2);
    Integer mu = round_rational(form(k1, k2) / form(k1, k1));
    if (mu == 0) break;
    k2 = k2 - Scalar(mu) * k1;
  }
  std::vector<Scalar> cands = {k1, k2, k1 + k2, k1 - k2};
  std::optional<Scalar> best;
  Rational best_q;
  for (auto c : cands) {
    if (c.is_zero()) continue;
    c = c.abs();
    Rational q = form(c, c);
    if (!best || q < best_q || (q == best_q && c > *best)) {
      best = c;
      best_q = q;
    }
  }
  return *best;
}

// Generator of the cyclic group {a x + b y : a, b in Z, part(a x + b y) = 0}.
std::optional<Scalar> line_generator(const Scalar& x, const Scalar& y, bool rational_line) {
  Rational px = rational_line ? x.phi_part() : x.rational_part();
  Rational py = rational_line ? y.phi_part() : y.rational_part();
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer den = boost::multiprecision::lcm(denominator(px), denominator(py));
  Integer ix = numerator(px) * (den / denominator(px));
  Integer iy = numerator(py) * (den / denominator(py));
  Integer a, b;
  if (ix == 0 && iy == 0) return std::nullopt;
  if (ix == 0) {
    a = 1;
    b = 0;
  } else if (iy == 0) {
    a = 0;
    b = 1;
  } else {
    Integer g = boost::multiprecision::gcd(ix, iy);
    a = iy / g;
    b = -ix / g;
  }
  Scalar e = Scalar(a) * x + Scalar(b) * y;
  if (e.is_zero()) return std::nullopt;
  return e.abs();
}

// Factors k with k v in span_Z(gens), as a subgroup of R.
RealSubgroup factors_on_ray(const std::vector<Vec>& gens, const Vec& v) {
  Matrix line = kernel_basis(Matrix::from_rows({v}));
  std::size_t pivot = 0;
  while (v[pivot].is_zero()) ++pivot;
  std::vector<Scalar> factors;
  for (const auto& g : zspan_intersect_kernel(gens, line)) factors.push_back(g[pivot] / v[pivot]);
  return real_subgroup_classify(factors);
}

// Preferred member of Q on the ray through v. A discrete factor group gives
// its generator. Otherwise v is first replaced by its Z[phi]-primitive
// multiple of least Minkowski length, then scaled by the least positive
// integer that lands in Q.
Scalar default_normal_scale(const Quasilattice& q, const Vec& v) {
  RealSubgroup s = factors_on_ray(q.generators(), v);
  if (s.kind == SubgroupKind::Trivial) return Scalar(1);
  if (s.kind == SubgroupKind::Discrete) return *s.generator;
  std::vector<Vec> ring;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ring.push_back(unit_vec(v.size(), i));
    ring.push_back(Scalar::phi() * unit_vec(v.size(), i));
  }
  RealSubgroup ideal = factors_on_ray(ring, v);
  Scalar c = minkowski_shortest(ideal.basis[0], ideal.basis[1], dot(v, v));
  RealSubgroup su = factors_on_ray(q.generators(), c * v);
  auto k = line_generator(su.basis[0], su.basis[1], true);
  return k ? *k * c : s.basis[0].abs();
}

// Shortest member of Q on the ray through v, as a multiple of v.
Scalar shortest_ray_scale(const std::vector<Vec>& lattice, const Vec& v) {
  RealSubgroup s = factors_on_ray(lattice, v);
  if (s.kind == SubgroupKind::Trivial) return Scalar(1);
  if (s.kind == SubgroupKind::Discrete) return *s.generator;
  return minkowski_shortest(s.basis[0], s.basis[1], dot(v, v));
}

std::vector<std::array<double, 2>> orthonormal_coordinates(const Matrix& basis, const std::vector<Vec>& normals) {
  std::vector<std::vector<double>> e;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::vector<double> b;
    for (const auto& x : basis.row(r)) b.push_back(x.to_double());
    for (const auto& prev : e) {
      double d = std::inner_product(b.begin(), b.end(), prev.begin(), 0.0);
      for (std::size_t i = 0; i < b.size(); ++i) b[i] -= d * prev[i];
    }
    double len = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
    for (auto& x : b) x /= len;
    e.push_back(b);
  }
  std::vector<std::array<double, 2>> out;
  for (const auto& x : normals) {
    std::array<double, 2> y{0, 0};
    for (std::size_t k = 0; k < 2 && k < e.size(); ++k)
      for (std::size_t i = 0; i < x.size(); ++i) y[k] += e[k][i] * x[i].to_double();
    out.push_back(y);
  }
  return out;
}

}  // namespace

ConeModel cone_at_vertex(const DelzantInput& input, int vertex) {
  check_vertex(input, vertex);
  ConeModel c;
  c.vertex = vertex;
  c.active = input.polytope.vertex_active(vertex);
  c.pi = cone_matrix(input, c.active);
  c.lattice = input.lattice.generators();
  Matrix k = kernel_basis(c.pi);
  c.kernel = k.rows() == 0 ? k : rref(k).reduced;
  std::vector<Vec> local;
  for (std::size_t j = 0; j < c.active.size(); ++j) local.push_back(c.pi.col(j));
  for (const auto& g : input.lattice.generators()) {
    if (zspan_coefficients(local, g)) continue;
    auto x = solve(c.pi, g);
    if (!x) continue;  // g outside the span of the cone normals
    Vec r;
    for (const auto& e : *x) r.push_back(e.frac());
    if (is_zero(r)) continue;
    if (std::find(c.component_gens.begin(), c.component_gens.end(), r) == c.component_gens.end())
      c.component_gens.push_back(r);
  }
  return c;
}

bool same_component_group(const ConeModel& cone, const std::vector<Vec>& reps) {
  std::vector<Vec> a, b;
  for (std::size_t j = 0; j < cone.active.size(); ++j) {
    a.push_back(cone.pi.col(j));
    b.push_back(cone.pi.col(j));
  }
  for (const auto& x : cone.component_gens) a.push_back(cone.pi * x);
  for (const auto& x : reps) b.push_back(cone.pi * x);
  return same_quasilattice(Quasilattice(a), Quasilattice(b));
}

CuttingPlane cutting_plane(const DelzantInput& input, int vertex, const PlaneOverride& o) {
  check_vertex(input, vertex);
  const Polytope& p = input.polytope;
  const std::size_t n = input.n();
  CuttingPlane cp;
  cp.vertex = vertex;
  if (o.normal) {
    if (o.normal->size() != n) throw Error(ErrorCode::DimMismatch, "cutting normal has the wrong length");
    cp.normal = *o.normal;
  } else {
    Vec v = zero_vec(n);
    for (int j : p.vertex_active(vertex)) v = v - p.normal(j);
    cp.normal = default_normal_scale(input.lattice, v) * v;
  }
  const Vec& mu = p.vertices()[static_cast<std::size_t>(vertex)];
  cp.vertex_value = dot(mu, cp.normal);
  std::vector<int> adjacent = p.adjacent_vertices(vertex);
  if (adjacent.empty()) throw Error(ErrorCode::NoSeparation, "vertex has no neighbours");
  cp.adjacent_value = dot(p.vertices()[static_cast<std::size_t>(adjacent[0])], cp.normal);
  for (int u : adjacent) cp.adjacent_value = std::max(cp.adjacent_value, dot(p.vertices()[static_cast<std::size_t>(u)], cp.normal));
  if (cp.adjacent_value >= cp.vertex_value)
    throw Error(ErrorCode::NoSeparation, "an adjacent vertex attains the vertex value " + cp.vertex_value.pretty());
  if (o.offset) {
    if (*o.offset >= cp.vertex_value || *o.offset < cp.adjacent_value)
      throw Error(ErrorCode::NoSeparation, "offset " + o.offset->pretty() + " does not separate the vertex");
    cp.offset = *o.offset;
  } else {
    cp.offset = (cp.vertex_value + cp.adjacent_value) / Scalar(2);
  }
  if (o.point) {
    if (o.point->size() != n || dot(*o.point, cp.normal) != cp.offset)
      throw Error(ErrorCode::InvalidArgument, "cut point is not on the plane");
    cp.point = *o.point;
  } else {
    cp.point = (cp.offset / dot(cp.normal, cp.normal)) * cp.normal;
  }
  if (o.plane_basis) {
    const Matrix& b = *o.plane_basis;
    if (b.rows() + 1 != n || b.cols() != n) throw Error(ErrorCode::DimMismatch, "plane basis must be (n-1) x n");
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (!dot(b.row(r), cp.normal).is_zero()) throw Error(ErrorCode::InvalidArgument, "plane basis is not orthogonal to the normal");
    if (rank(b) != n - 1) throw Error(ErrorCode::Degenerate, "plane basis is dependent");
    cp.plane_basis = b;
  } else {
    cp.plane_basis = kernel_basis(Matrix::from_rows({cp.normal}));
  }
  return cp;
}

LinkModel link_at_vertex(const DelzantInput& input, int vertex, const PlaneOverride& o) {
  CuttingPlane cp = cutting_plane(input, vertex, o);
  const Polytope& p = input.polytope;
  const std::size_t n = input.n();
  IndexSet facets = p.vertex_active(vertex);

  HPolytope h;
  h.dim = static_cast<int>(n - 1);
  for (int j : facets) {
    Vec y;
    for (std::size_t k = 0; k + 1 < n; ++k) y.push_back(dot(cp.plane_basis.row(k), p.normal(j)));
    h.halfspaces.push_back({y, p.lambda(j) - dot(cp.point, p.normal(j))});
  }
  Polytope link_polytope(h);

  // Coordinates along the dual basis reproduce the pairings <b_k, X>.
  Matrix m = cp.plane_basis;
  m.append_row(cp.normal);
  Matrix inv = invert(m);
  Matrix dual(0, n);
  for (std::size_t k = 0; k + 1 < n; ++k) dual.append_row(inv.col(k));
  Quasilattice q_link = project(input.lattice, dual, cp.normal);

  DelzantInput link_input = DelzantInput::make(link_polytope, q_link);
  DelzantData data = build(link_input);

  Matrix pi_c = cone_matrix(input, facets);
  Matrix frame_free = kernel_basis(kernel_basis(Matrix::from_rows({cp.normal})) * pi_c);

  std::vector<Vec> normals;
  for (int j : facets) normals.push_back(p.normal(j));
  auto numeric = orthonormal_coordinates(cp.plane_basis, normals);
  return LinkModel{cp, facets, std::move(link_input), std::move(data), frame_free, numeric};
}

namespace {

std::string multiples(const Scalar& g) { return g == Scalar(1) ? "Z" : g.pretty() + "Z"; }

std::string presentation_of(const FiberReport& f) {
  switch (f.group.kind) {
    case SubgroupKind::Trivial:
      return "R";
    case SubgroupKind::Discrete:
      return "R/" + multiples(*f.group.generator) + " (circle)";
    case SubgroupKind::Dense:
      break;
  }
  return "R/(" + multiples(f.group.basis[0]) + " + " + multiples(f.group.basis[1]) + ") (quasicircle)";
}

RealSubgroup t_values(const ConeModel& cone, const Matrix& constraints, const std::vector<Vec>& gens, const Vec& xnu,
                      const Scalar& alpha) {
  std::vector<Vec> inter = zspan_intersect_kernel(gens, constraints);
  std::vector<Scalar> ts;
  Scalar nn = dot(xnu, xnu);
  for (const auto& m : inter) ts.push_back(dot(cone.pi * m, xnu) / nn / alpha);
  return real_subgroup_classify(ts);
}

}  // namespace

FiberReport fiber_group(const ConeModel& cone, const LinkModel& link, const std::optional<Vec>& w) {
  const std::size_t k = cone.active.size();
  std::size_t link_dim = link.data.kernel.basis.rows();
  if (link_dim != cone.kernel.rows() + 1)
    throw Error(ErrorCode::DimMismatch, "fiber is " + std::to_string(link_dim) + " - " +
                                            std::to_string(cone.kernel.rows()) + " dimensional, expected 1");
  const Vec& xnu = link.plane.normal;
  Matrix constraints = link.plane.plane_basis * cone.pi;
  FiberReport f;
  if (w) {
    if (w->size() != k) throw Error(ErrorCode::DimMismatch, "w has the wrong length");
    if (!is_zero(constraints * *w)) throw Error(ErrorCode::InvalidArgument, "w is not in the link kernel");
    if (is_zero(cone.pi * *w)) throw Error(ErrorCode::InvalidArgument, "w lies in the cone kernel");
    f.w = *w;
  } else {
    f.w = *solve(cone.pi, shortest_ray_scale(cone.lattice, xnu) * xnu);
  }
  Scalar alpha = dot(cone.pi * f.w, xnu) / dot(xnu, xnu);
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < k; ++j) gens.push_back(unit_vec(k, j));
  f.connected_group = t_values(cone, constraints, gens, xnu, alpha);
  for (const auto& c : cone.component_gens) gens.push_back(c);
  f.group = t_values(cone, constraints, gens, xnu, alpha);
  if (f.group.kind == SubgroupKind::Dense) {
    f.rational_generator = line_generator(f.group.basis[0], f.group.basis[1], true);
    f.phi_generator = line_generator(f.group.basis[0], f.group.basis[1], false);
  }
  f.presentation = presentation_of(f);
  return f;
}

StratificationReport stratification_report(const DelzantInput& input) {
  const Polytope& p = input.polytope;
  StratificationReport r;
  r.regular_dim = 2 * p.dim();
  for (const auto& face : p.faces())
    r.strata.push_back({face.active, face.dim, 2 * face.dim, face.kind == FaceKind::Singular});

  bool trivial_groups = true;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    if (p.vertex_active(v).size() != input.n()) continue;
    ChartGroup g = chart_group(input, p.vertex_active(v));
    trivial_groups = trivial_groups && g.trivial();
    r.simple_vertex_groups.push_back({ChartId{v, g.triple}, g});
  }
  for (const auto& c : admissible_charts(input))
    if (trivial_groups && !chart_group(input, c.triple).trivial()) trivial_groups = false;
  if (!is_lattice(input.lattice))
    r.kind = "quasifold";
  else
    r.kind = trivial_groups ? "manifold" : "orbifold";

  if (input.n() != 3) return r;
  for (int v : singular_vertices(p)) {
    SingularVertexReport s;
    s.vertex = v;
    s.cone = cone_at_vertex(input, v);
    LinkModel l = link_at_vertex(input, v);
    s.plane = l.plane;
    s.link_facets = l.facets;
    for (const auto& hs : l.input.polytope.h().halfspaces) {
      s.link_normals.push_back(hs.normal);
      s.link_lambdas.push_back(hs.lambda);
    }
    s.link_lattice = l.input.lattice;
    s.fiber = fiber_group(s.cone, l);
    s.moment_coordinates = moment_coordinates(p, p.vertices()[static_cast<std::size_t>(v)]);
    r.singular.push_back(std::move(s));
  }
  return r;
}

}  // namespace toricforge
