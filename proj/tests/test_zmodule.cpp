#include "doctest.h"

#include "toricforge/zmodule.hpp"

#include <random>

using namespace toricforge;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_hermite(const HermiteForm& hf) {
  const IntMatrix& h = hf.H;
  std::size_t r = hf.rank();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (i >= r) {
        if (h(i, j) != 0) return false;
        continue;
      }
      std::size_t p = hf.pivots[i];
      if (j < p && h(i, j) != 0) return false;
      if (j == p && h(i, j) <= 0) return false;
    }
    if (i < r) {
      std::size_t p = hf.pivots[i];
      for (std::size_t k = 0; k < i; ++k)
        if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
      if (i > 0 && hf.pivots[i - 1] >= p) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of identity and simple cases") {
  auto hf = hnf(IntMatrix::identity(3));
  CHECK(hf.H == IntMatrix::identity(3));
  auto none = integer_solve(IntMatrix::from_rows({{2}}), IntVec{3});
  CHECK_FALSE(none.has_value());
  auto sol = integer_solve(IntMatrix::identity(3), IntVec{4, -1, 7});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == IntVec{4, -1, 7});
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    IntMatrix a = random_int_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5);
    HermiteForm hf = hnf(a);
    CHECK(hf.H == hf.U * a);
    Integer d = int_determinant(hf.U);
    CHECK((d == 1 || d == -1));
    CHECK(is_hermite(hf));
  }
}

TEST_CASE("integer_solve on the tetrahedral lattice") {
  // Columns Y1, Y2, Y3.
  IntMatrix a = IntMatrix::from_rows({{1, 1, -1}, {1, -1, 1}, {1, -1, -1}});
  auto sol = integer_solve(a, IntVec{2, 0, 0});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == IntVec{1, 1, 0});
  CHECK(sol->kernel.rows() == 0);
  // Brute-force oracle over [-3,3]^3.
  IntVec found;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int z = -3; z <= 3; ++z)
        if (a * IntVec{x, y, z} == IntVec{2, 0, 0}) found = IntVec{x, y, z};
  CHECK(found == IntVec{1, 1, 0});
}

TEST_CASE("integer_solve agrees with brute force") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 300; ++t) {
    std::size_t rows = 1 + t % 3, cols = 1 + (t / 3) % 3;
    IntMatrix a = random_int_matrix(rng, rows, cols);
    IntVec b(rows);
    for (auto& x : b) x = d(rng);
    bool brute = false;
    // The box can only certify existence; nonexistence is checked by
    // substitution of whatever the solver returns.
    std::vector<int> x(cols, -6);
    for (;;) {
      IntVec xv(x.begin(), x.end());
      if (a * xv == b) {
        brute = true;
        break;
      }
      std::size_t k = 0;
      while (k < cols && ++x[k] > 6) x[k++] = -6;
      if (k == cols) break;
    }
    auto sol = integer_solve(a, b);
    if (brute) CHECK(sol.has_value());
    if (sol) {
      CHECK(a * sol->particular == b);
      for (std::size_t i = 0; i < sol->kernel.rows(); ++i)
        CHECK(a * sol->kernel.row(i) == IntVec(rows));
    }
  }
}

TEST_CASE("integer kernel is saturated") {
  IntMatrix a = IntMatrix::from_rows({{2, 4, 6}});
  IntMatrix k = integer_kernel(a);
  CHECK(k.rows() == 2);
  // Every integer kernel vector is an integer combination of the rows.
  auto sol = integer_solve(k.transpose(), IntVec{-2, 1, 0});
  CHECK(sol.has_value());
  sol = integer_solve(k.transpose(), IntVec{-3, 0, 1});
  CHECK(sol.has_value());
}

TEST_CASE("real subgroup classification") {
  CHECK(real_subgroup_classify({Scalar(0)}).kind == SubgroupKind::Trivial);
  auto g = real_subgroup_classify({Scalar(0, 2)});
  CHECK(g.kind == SubgroupKind::Discrete);
  CHECK(*g.generator == Scalar(0, 2));
  CHECK(real_subgroup_classify({Scalar(1), Scalar::phi()}).kind == SubgroupKind::Dense);
  auto h = real_subgroup_classify({Scalar::fraction(4, 3), Scalar(-2), Scalar(0)});
  CHECK(h.kind == SubgroupKind::Discrete);
  CHECK(*h.generator == Scalar::fraction(2, 3));
  auto q = real_subgroup_classify({Scalar(0, -6), Scalar(0, 4)});
  CHECK(*q.generator == Scalar(0, 2));
  auto dense = real_subgroup_classify({Scalar(2) * Scalar::phi() - 1, Scalar(2) / Scalar::phi()});
  CHECK(dense.kind == SubgroupKind::Dense);
  REQUIRE(dense.basis.size() == 2);
  CHECK(dense.basis[0] == Scalar(1));
  CHECK(dense.basis[1] == Scalar(0, 2));
}

TEST_CASE("Z-span helpers") {
  std::vector<Vec> gens{{1, 0}, {0, 1}};
  CHECK(zspan_coefficients(gens, Vec{3, -2}) == IntVec{3, -2});
  CHECK_FALSE(zspan_coefficients(gens, Vec{Scalar::fraction(1, 2), 0}).has_value());
  CHECK_FALSE(zspan_coefficients(gens, Vec{Scalar::phi(), 0}).has_value());
  std::vector<Vec> golden{{1, 0}, {0, 1}, {Scalar::phi(), 0}};
  CHECK(zspan_rank(golden) == 3);
  auto inter = zspan_intersect_kernel(golden, Matrix::from_rows({{0, 1}}));
  CHECK(zspan_rank(inter) == 2);
  for (const auto& v : inter) CHECK(v[1].is_zero());
}
