#pragma once

// Dense exact linear algebra over Q(phi).

#include "toricforge/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toricforge {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;
  Matrix transpose() const;
  Matrix select_columns(const std::vector<int>& cols) const;
  void append_row(const Vec& r);
  bool is_zero() const;
  Field field() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec cross(const Vec& a, const Vec& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rows form a basis of the right null space, one per free column with a 1 there.
Matrix kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& v);
Matrix invert(const Matrix& m);
Scalar determinant(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);
// True iff v lies in the row space of m.
bool in_row_space(const Matrix& m, const Vec& v);

}  // namespace toricforge
