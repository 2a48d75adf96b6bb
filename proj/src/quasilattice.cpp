#include "toricforge/quasilattice.hpp"

#include "toricforge/error.hpp"

namespace toricforge {

Quasilattice::Quasilattice(std::vector<Vec> generators, std::string name)
    : gens_(std::move(generators)), name_(std::move(name)) {
  if (gens_.empty()) throw Error(ErrorCode::Degenerate, "quasilattice needs generators");
  dim_ = gens_.front().size();
  for (const auto& g : gens_)
    if (g.size() != dim_) throw Error(ErrorCode::DimMismatch, "quasilattice generators differ in length");
  if (rank(Matrix::from_rows(gens_)) != dim_)
    throw Error(ErrorCode::Degenerate, "quasilattice generators do not span the space");
}

Quasilattice Quasilattice::standard(std::size_t n) {
  std::vector<Vec> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(unit_vec(n, i));
  return Quasilattice(std::move(g), n == 3 ? "Z3" : "Z" + std::to_string(n));
}

std::optional<MembershipCertificate> member(const Quasilattice& q, const Vec& v) {
  if (v.size() != q.dim()) throw Error(ErrorCode::DimMismatch, "member: vector length");
  return zspan_coefficients(q.generators(), v);
}

bool verify_certificate(const Quasilattice& q, const Vec& v, const MembershipCertificate& c) {
  return c.size() == q.generators().size() && integer_combination(q.generators(), c, q.dim()) == v;
}

bool is_lattice(const Quasilattice& q) { return zspan_rank(q.generators()) == q.dim(); }

bool same_quasilattice(const Quasilattice& a, const Quasilattice& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& g : a.generators())
    if (!member(b, g)) return false;
  for (const auto& g : b.generators())
    if (!member(a, g)) return false;
  return true;
}

std::optional<Integer> lattice_index_in_standard(const Quasilattice& q) {
  if (!is_lattice(q)) return std::nullopt;
  for (const auto& g : q.generators())
    for (const auto& x : g)
      if (!x.is_integer()) return std::nullopt;
  std::vector<Vec> basis = zspan_basis(q.generators());
  Scalar det = determinant(Matrix::from_rows(basis));
  return numerator(det.abs().rational_part());
}

bool QuasirationalityReport::ok() const { return failures().empty(); }

std::vector<int> QuasirationalityReport::failures() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < certificates.size(); ++j)
    if (!certificates[j]) out.push_back(static_cast<int>(j));
  return out;
}

QuasirationalityReport is_quasirational(const HPolytope& h, const Quasilattice& q) {
  QuasirationalityReport r;
  for (const auto& hs : h.halfspaces) r.certificates.push_back(member(q, hs.normal));
  return r;
}

Quasilattice project(const Quasilattice& q, const Matrix& plane_basis, const Vec& direction) {
  const std::size_t n = q.dim();
  if (plane_basis.cols() != n || direction.size() != n || plane_basis.rows() + 1 != n)
    throw Error(ErrorCode::DimMismatch, "project: plane basis must have n-1 rows of length n");
  std::vector<Vec> cols = plane_basis.row_list();
  cols.push_back(direction);
  Matrix m = Matrix::from_columns(cols);
  if (determinant(m).is_zero()) throw Error(ErrorCode::Degenerate, "projection direction lies in the plane");
  Matrix inv = invert(m);
  std::vector<Vec> images;
  for (const auto& g : q.generators()) {
    Vec coords = inv * g;
    coords.pop_back();
    if (!is_zero(coords)) images.push_back(std::move(coords));
  }
  return Quasilattice(std::move(images), q.name().empty() ? "" : q.name() + "_L");
}

}  // namespace toricforge
