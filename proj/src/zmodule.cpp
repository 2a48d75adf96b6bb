#include "toricforge/zmodule.hpp"

#include "toricforge/error.hpp"

#include <algorithm>

namespace toricforge {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimMismatch, "ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::append_row(const IntVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::DimMismatch, "integer row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "integer matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimMismatch, "integer matrix-vector shape");
  IntVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Integer int_determinant(const IntMatrix& m) {
  Matrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Scalar(m(i, j));
  Scalar d = determinant(q);
  return numerator(d.rational_part());
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_i -= q * row_r
void sub_row(IntMatrix& m, std::size_t i, std::size_t r, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(r, j) != 0) m(i, j) -= q * m(r, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      sub_row(h, i, r, q);
      sub_row(u, i, r, q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::optional<IntegerSolution> integer_solve(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimMismatch, "integer_solve: rhs length");
  const std::size_t m = a.rows(), k = a.cols();
  // H = U * A^T, so A * U^T = H^T; substitute x = U^T y.
  HermiteForm hf = hnf(a.transpose());
  const IntMatrix& h = hf.H;
  const std::size_t r = hf.rank();
  IntVec y(k);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = hf.pivots[i];
    Integer s = b[p];
    for (std::size_t t = 0; t < i; ++t) s -= h(t, p) * y[t];
    if (s % h(i, p) != 0) return std::nullopt;
    y[i] = s / h(i, p);
  }
  for (std::size_t j = 0; j < m; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < r; ++i) s += h(i, j) * y[i];
    if (s != b[j]) return std::nullopt;
  }
  IntegerSolution sol;
  sol.particular.assign(k, Integer(0));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < r; ++i) sol.particular[l] += hf.U(i, l) * y[i];
  sol.kernel = IntMatrix(0, k);
  for (std::size_t i = r; i < k; ++i) sol.kernel.append_row(hf.U.row(i));
  return sol;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  return integer_solve(a, IntVec(a.rows()))->kernel;
}

std::vector<Rational> rationalize(const Vec& v) {
  std::vector<Rational> out(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].rational_part();
    out[v.size() + i] = v[i].phi_part();
  }
  return out;
}

RationalizedSystem rationalized_system(const std::vector<Vec>& gens, const Vec* target) {
  std::size_t n = target ? target->size() : (gens.empty() ? 0 : gens.front().size());
  std::vector<std::vector<Rational>> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::DimMismatch, "generator length mismatch");
    cols.push_back(rationalize(g));
  }
  std::vector<Rational> rt = target ? rationalize(*target) : std::vector<Rational>(2 * n);
  RationalizedSystem sys{IntMatrix(2 * n, gens.size()), IntVec(2 * n)};
  for (std::size_t i = 0; i < 2 * n; ++i) {
    Integer l = denominator(rt[i]);
    for (const auto& c : cols) l = lcm(l, denominator(c[i]));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Rational s = cols[j][i] * l;
      sys.a(i, j) = numerator(s);
    }
    sys.b[i] = numerator(Rational(rt[i] * l));
  }
  return sys;
}

std::optional<IntVec> zspan_coefficients(const std::vector<Vec>& gens, const Vec& target) {
  if (gens.empty()) {
    if (is_zero(target)) return IntVec{};
    return std::nullopt;
  }
  RationalizedSystem sys = rationalized_system(gens, &target);
  auto sol = integer_solve(sys.a, sys.b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::size_t zspan_rank(const std::vector<Vec>& gens) {
  if (gens.empty()) return 0;
  RationalizedSystem sys = rationalized_system(gens, nullptr);
  return hnf(sys.a).rank();
}

Vec integer_combination(const std::vector<Vec>& gens, const IntVec& coeffs, std::size_t dim) {
  Vec v(dim);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (coeffs[i] != 0) v = v + Scalar(coeffs[i]) * gens[i];
  return v;
}

std::vector<Vec> zspan_intersect_kernel(const std::vector<Vec>& gens, const Matrix& constraints) {
  if (gens.empty()) return {};
  std::size_t dim = gens.front().size();
  if (constraints.rows() == 0) return gens;
  std::vector<Vec> images;
  images.reserve(gens.size());
  for (const auto& g : gens) images.push_back(constraints * g);
  RationalizedSystem sys = rationalized_system(images, nullptr);
  IntMatrix k = integer_kernel(sys.a);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vec v = integer_combination(gens, k.row(i), dim);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> zspan_basis(const std::vector<Vec>& gens) {
  if (gens.empty()) return {};
  std::size_t n = gens.front().size();
  Integer d = 1;
  for (const auto& g : gens)
    for (const auto& x : g) d = lcm(d, lcm_of_denominators(x));
  IntMatrix rows(gens.size(), 2 * n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto r = rationalize(gens[i]);
    for (std::size_t j = 0; j < 2 * n; ++j) rows(i, j) = numerator(Rational(r[j] * d));
  }
  HermiteForm hf = hnf(rows);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < hf.rank(); ++i) {
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j)
      v[j] = Scalar(Rational(hf.H(i, j), d), Rational(hf.H(i, n + j), d));
    out.push_back(std::move(v));
  }
  return out;
}

RealSubgroup real_subgroup_classify(const std::vector<Scalar>& gens) {
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(Vec{g});
  std::vector<Vec> basis = zspan_basis(vs);
  RealSubgroup out;
  for (const auto& b : basis) out.basis.push_back(b[0].abs());
  if (basis.empty()) {
    out.kind = SubgroupKind::Trivial;
  } else if (basis.size() == 1) {
    out.kind = SubgroupKind::Discrete;
    out.generator = out.basis[0];
  } else {
    out.kind = SubgroupKind::Dense;
  }
  return out;
}

const char* subgroup_kind_name(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::Discrete: return "discrete";
    case SubgroupKind::Dense: return "dense";
  }
  return "?";
}

}  // namespace toricforge
