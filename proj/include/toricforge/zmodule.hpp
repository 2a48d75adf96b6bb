#pragma once

// Integer normal forms and Z-span computations over Q(phi) vectors.

#include "toricforge/linalg.hpp"

#include <optional>
#include <vector>

namespace toricforge {

using IntVec = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  IntVec row(std::size_t i) const;
  IntMatrix transpose() const;
  void append_row(const IntVec& r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& v);
Integer int_determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Row-style Hermite normal form: H = U * A, U unimodular, positive pivots,
// entries above each pivot reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& a);

struct IntegerSolution {
  IntVec particular;
  IntMatrix kernel;  // rows: Z-basis of the integer kernel lattice
};

std::optional<IntegerSolution> integer_solve(const IntMatrix& a, const IntVec& b);
IntMatrix integer_kernel(const IntMatrix& a);

// Each Q(phi) coordinate becomes two rational coordinates (a, b).
std::vector<Rational> rationalize(const Vec& v);
// Columns = rationalized generators; each row scaled to clear denominators
// together with the matching entry of the optional target.
struct RationalizedSystem {
  IntMatrix a;
  IntVec b;
};
RationalizedSystem rationalized_system(const std::vector<Vec>& gens, const Vec* target);

// Integer coefficients c with sum c_i gens_i = target, if any.
std::optional<IntVec> zspan_coefficients(const std::vector<Vec>& gens, const Vec& target);
// Rank of the Z-module spanned by gens (equals the Q-rank of the rationalized matrix).
std::size_t zspan_rank(const std::vector<Vec>& gens);
// Z-generators of span_Z(gens) intersected with the right kernel of `constraints`
// (vectors g with constraints * g = 0).
std::vector<Vec> zspan_intersect_kernel(const std::vector<Vec>& gens, const Matrix& constraints);
// Z-basis of span_Z(gens) after Hermite reduction of the rationalized coordinates.
std::vector<Vec> zspan_basis(const std::vector<Vec>& gens);
Vec integer_combination(const std::vector<Vec>& gens, const IntVec& coeffs, std::size_t dim);

enum class SubgroupKind { Trivial, Discrete, Dense };

struct RealSubgroup {
  SubgroupKind kind = SubgroupKind::Trivial;
  std::optional<Scalar> generator;  // Discrete only, positive
  std::vector<Scalar> basis;        // reduced Z-basis (rank 0, 1 or 2)
};

RealSubgroup real_subgroup_classify(const std::vector<Scalar>& gens);
const char* subgroup_kind_name(SubgroupKind k);

}  // namespace toricforge
