#include "toricforge/delzant.hpp"

#include "toricforge/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

namespace toricforge {

namespace mp = boost::multiprecision;

DelzantInput DelzantInput::make(Polytope p, Quasilattice q) {
  if (q.dim() != static_cast<std::size_t>(p.dim()))
    throw Error(ErrorCode::DimMismatch, "quasilattice and polytope dimensions differ");
  auto report = is_quasirational(p.h(), q);
  if (!report.ok()) {
    std::string which;
    for (int j : report.failures()) which += (which.empty() ? "" : ",") + std::to_string(j + 1);
    throw Error(ErrorCode::NotQuasirational, "normals not in the quasilattice: X_" + which);
  }
  std::vector<MembershipCertificate> certs;
  for (const auto& c : report.certificates) certs.push_back(*c);
  return DelzantInput{std::move(p), std::move(q), std::move(certs)};
}

bool ComplexModel::admissible(const IndexSet& zero_set) const {
  for (const auto& pattern : vertex_patterns)
    if (std::includes(pattern.begin(), pattern.end(), zero_set.begin(), zero_set.end())) return true;
  return false;
}

DelzantData build(const DelzantInput& input) {
  const Polytope& p = input.polytope;
  std::vector<Vec> cols;
  for (int j = 0; j < static_cast<int>(input.d()); ++j) cols.push_back(p.normal(j));
  DelzantData out;
  out.kernel.pi = Matrix::from_columns(cols, input.n());
  Matrix k = kernel_basis(out.kernel.pi);
  if (k.rows() > 0) {
    RrefResult r = rref(k);
    Matrix basis(0, input.d());
    for (std::size_t i = 0; i < r.rank(); ++i) basis.append_row(r.reduced.row(i));
    out.kernel.basis = basis;
  } else {
    out.kernel.basis = Matrix(0, input.d());
  }
  out.moment.B = out.kernel.basis;
  Vec lambda;
  for (int j = 0; j < static_cast<int>(input.d()); ++j) lambda.push_back(p.lambda(j));
  out.moment.c = Scalar(-1) * (out.moment.B * lambda);
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) out.model.vertex_patterns.push_back(p.vertex_active(v));
  return out;
}

bool kernel_presentation_matches(const KernelData& k, const Matrix& reference_rows) {
  return same_row_space(k.basis, reference_rows);
}

namespace {

Matrix augmented(const Matrix& b, const Vec& c) {
  Matrix m(0, b.cols() + 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Vec r = b.row(i);
    r.push_back(c[i]);
    m.append_row(r);
  }
  return m;
}

}  // namespace

bool moment_system_matches(const MomentSystem& m, const Matrix& reference_b, const Vec& reference_c) {
  if (reference_b.cols() != m.B.cols() || reference_b.rows() != reference_c.size()) return false;
  return same_row_space(augmented(m.B, m.c), augmented(reference_b, reference_c));
}

bool n_is_connected(const DelzantInput& input) {
  std::vector<Vec> normals;
  for (int j = 0; j < static_cast<int>(input.d()); ++j) normals.push_back(input.polytope.normal(j));
  return same_quasilattice(Quasilattice(normals), input.lattice);
}

bool relation_check(const std::vector<Vec>& lhs, const Matrix& coeffs, const std::vector<Vec>& rhs) {
  if (coeffs.rows() != lhs.size() || coeffs.cols() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    Vec sum = zero_vec(lhs[i].size());
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      if (rhs[k].size() != lhs[i].size()) return false;
      sum = sum + coeffs(i, k) * rhs[k];
    }
    if (sum != lhs[i]) return false;
  }
  return true;
}

bool orbit_is_closed(const ComplexModel& model, const std::vector<Face>& faces, const IndexSet& zero_set) {
  if (!model.admissible(zero_set))
    throw Error(ErrorCode::NotInModel, "zero set " + index_set_str(zero_set) + " is not contained in any vertex pattern");
  for (const auto& f : faces)
    if (f.active == zero_set) return true;
  return false;
}

const Face& closed_orbit_in_closure(const Polytope& p, const ComplexModel& model, const IndexSet& zero_set) {
  if (!model.admissible(zero_set))
    throw Error(ErrorCode::NotInModel, "zero set " + index_set_str(zero_set) + " is not contained in any vertex pattern");
  return p.face_from_active_set(zero_set);
}

Matrix isotropy_algebra(const KernelData& k, const Face& f) {
  std::size_t d = k.pi.cols();
  Matrix local = kernel_basis(k.pi.select_columns(f.active));
  Matrix out(0, d);
  for (std::size_t i = 0; i < local.rows(); ++i) {
    Vec v = zero_vec(d);
    for (std::size_t a = 0; a < f.active.size(); ++a) v[static_cast<std::size_t>(f.active[a])] = local(i, a);
    out.append_row(v);
  }
  return out;
}

Vec moment_coordinates(const Polytope& p, const Vec& mu) {
  Vec s;
  for (int j = 0; j < static_cast<int>(p.num_facets()); ++j) s.push_back(p.slack(mu, j));
  return s;
}

MomentIdentityReport moment_polytope_identity(const MomentSystem& m, const DelzantInput& input) {
  MomentIdentityReport r;
  const Polytope& p = input.polytope;
  std::size_t d = input.d(), n = input.n();
  Matrix pi_rows(0, n);
  for (int j = 0; j < static_cast<int>(d); ++j) pi_rows.append_row(p.normal(j));
  r.annihilates = (m.B * pi_rows).is_zero();
  r.injective = rank(pi_rows) == n;

  // Solutions of B s = c form s0 + N y; a basic solution sets n coordinates to zero.
  std::vector<Vec> bfs;
  auto s0 = solve(m.B, m.c);
  if (s0) {
    Matrix nb = kernel_basis(m.B);  // rows
    std::size_t free_dim = nb.rows();
    for_each_subset(static_cast<int>(d), static_cast<int>(free_dim), [&](const std::vector<int>& z) {
      Matrix sub(free_dim, free_dim);
      Vec rhs(free_dim);
      for (std::size_t a = 0; a < free_dim; ++a) {
        auto j = static_cast<std::size_t>(z[a]);
        for (std::size_t b = 0; b < free_dim; ++b) sub(a, b) = nb(b, j);
        rhs[a] = Scalar(0) - (*s0)[j];
      }
      if (determinant(sub).is_zero()) return true;
      Vec y = *solve(sub, rhs);
      Vec s = *s0;
      for (std::size_t b = 0; b < free_dim; ++b) s = s + y[b] * nb.row(b);
      for (const auto& x : s)
        if (x.sign() < 0) return true;
      bfs.push_back(s);
      return true;
    });
  }
  std::sort(bfs.begin(), bfs.end());
  bfs.erase(std::unique(bfs.begin(), bfs.end()), bfs.end());
  r.bfs_count = bfs.size();

  std::vector<Vec> images;
  for (const auto& mu : p.vertices()) images.push_back(moment_coordinates(p, mu));
  std::sort(images.begin(), images.end());
  r.vertices_match = images == bfs;
  return r;
}

int default_precision() {
  if (const char* env = std::getenv("TORICFORGE_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 53;
}

namespace {

template <class Real>
LevelSetSample sample_with(const MomentSystem& m, const Vec& s_exact, const std::vector<double>& phases) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  using std::abs;
  LevelSetSample out;
  std::vector<Real> modulus2;
  for (std::size_t j = 0; j < s_exact.size(); ++j) {
    Real s = s_exact[j].to_real<Real>();
    Real r = sqrt(s);
    Real theta = j < phases.size() ? Real(phases[j]) : Real(0);
    Real re = r * cos(theta), im = r * sin(theta);
    modulus2.push_back(re * re + im * im);
    out.s.push_back(static_cast<double>(modulus2.back()));
  }
  Real worst = 0;
  for (std::size_t i = 0; i < m.B.rows(); ++i) {
    Real acc = -m.c[i].to_real<Real>();
    for (std::size_t j = 0; j < m.B.cols(); ++j)
      if (!m.B(i, j).is_zero()) acc += m.B(i, j).template to_real<Real>() * modulus2[j];
    Real a = abs(acc);
    if (a > worst) worst = a;
  }
  out.max_residual = static_cast<double>(worst);
  return out;
}

}  // namespace

LevelSetSample sample_level_set(const MomentSystem& m, const DelzantInput& input, const Vec& mu,
                                const std::vector<double>& phases, int precision) {
  if (mu.size() != input.n()) throw Error(ErrorCode::DimMismatch, "point has wrong dimension");
  if (!input.polytope.contains(mu)) throw Error(ErrorCode::OutOfPolytope, "point lies outside the polytope");
  if (precision <= 0) precision = default_precision();
  Vec s = moment_coordinates(input.polytope, mu);
  LevelSetSample out;
  if (precision <= 53) {
    out = sample_with<double>(m, s, phases);
  } else if (precision <= 113) {
    out = sample_with<mp::cpp_bin_float_quad>(m, s, phases);
  } else {
    out = sample_with<mp::cpp_bin_float_100>(m, s, phases);
  }
  out.precision = precision;
  return out;
}

}  // namespace toricforge
