#include "toricforge/reference.hpp"

#include "toricforge/error.hpp"

#include <cmath>

namespace toricforge::reference {

namespace {

const Scalar kPhi = Scalar::phi();
const Scalar kInvPhi = Scalar::phi() - 1;
const Scalar kHalf = Scalar::fraction(1, 2);

// Row with the given 1-based entries set.
Vec row(std::size_t d, std::initializer_list<std::pair<int, Scalar>> entries) {
  Vec v = zero_vec(d);
  for (const auto& [i, x] : entries) v[static_cast<std::size_t>(i - 1)] = v[static_cast<std::size_t>(i - 1)] + x;
  return v;
}

IndexSet one_based(std::initializer_list<int> ids) {
  IndexSet s;
  for (int i : ids) s.push_back(i - 1);
  return s;
}

}  // namespace

LinearSystem moment_system(const std::string& solid) {
  std::vector<Vec> rows;
  Vec c;
  if (solid == "tetrahedron") {
    rows = {row(4, {{1, 1}, {2, 1}, {3, 1}, {4, 1}})};
    c = {4};
  } else if (solid == "cube") {
    rows = {row(6, {{1, 1}, {2, 1}}), row(6, {{3, 1}, {4, 1}}), row(6, {{5, 1}, {6, 1}})};
    c = {2, 2, 2};
  } else if (solid == "octahedron") {
    for (int i = 1; i <= 4; ++i) rows.push_back(row(8, {{i, 1}, {i + 4, 1}}));
    rows.push_back(row(8, {{3, 1}, {4, 1}, {5, -1}, {6, -1}}));
    c = {2, 2, 2, 2, 0};
  } else if (solid == "dodecahedron") {
    for (int i = 1; i <= 6; ++i) rows.push_back(row(12, {{i, 1}, {i + 6, 1}}));
    rows.push_back(row(12, {{1, 1}, {2, 1}, {3, -kPhi}, {4, -kPhi}}));
    rows.push_back(row(12, {{2, 1}, {3, 1}, {1, -kPhi}, {5, -kPhi}}));
    rows.push_back(row(12, {{1, 1}, {3, 1}, {2, -kPhi}, {6, -kPhi}}));
    c = {2, 2, 2, 2, 2, 2};
    Scalar r = Scalar(-2) / kPhi;
    c.insert(c.end(), {r, r, r});
  } else if (solid == "icosahedron") {
    for (int i = 1; i <= 10; ++i) rows.push_back(row(20, {{i, 1}, {i + 10, 1}}));
    Scalar a = kPhi + kInvPhi;
    rows.push_back(row(20, {{1, 1}, {4, kHalf * a}, {5, kHalf * kPhi}, {6, kHalf * kInvPhi}}));
    rows.push_back(row(20, {{2, 1}, {4, kHalf * kInvPhi}, {5, kHalf * a}, {6, kHalf * kPhi}}));
    rows.push_back(row(20, {{3, 1}, {4, kHalf * kPhi}, {5, kHalf * kInvPhi}, {6, kHalf * a}}));
    rows.push_back(row(20, {{7, 1}, {4, 1}, {5, 1}, {6, 1}}));
    rows.push_back(row(20, {{8, 1}, {4, -kHalf * kInvPhi}, {5, kHalf}, {6, kHalf * kPhi}}));
    rows.push_back(row(20, {{9, 1}, {4, kHalf * kPhi}, {5, -kHalf * kInvPhi}, {6, kHalf}}));
    rows.push_back(row(20, {{10, 1}, {4, kHalf}, {5, kHalf * kPhi}, {6, -kHalf * kInvPhi}}));
    c = Vec(10, Scalar(2));
    Scalar two_phi = Scalar(2) * kPhi;
    c.insert(c.end(), {two_phi, two_phi, two_phi, Scalar(4), Scalar(2), Scalar(2), Scalar(2)});
  } else {
    throw Error(ErrorCode::UnknownSolid, "no reference system for '" + solid + "'");
  }
  return {Matrix::from_rows(rows), c};
}

Matrix kernel_rows(const std::string& solid) {
  if (solid == "dodecahedron" || solid == "icosahedron") return moment_system(solid).B;
  throw Error(ErrorCode::UnknownSolid, "no reference kernel for '" + solid + "'");
}

std::vector<IndexSet> vertex_table(const std::string& solid) {
  if (solid == "octahedron")
    return {one_based({3, 4, 5, 6}), one_based({1, 2, 7, 8}), one_based({2, 4, 5, 7}),
            one_based({1, 3, 6, 8}), one_based({2, 3, 5, 8}), one_based({1, 4, 6, 7})};
  if (solid == "icosahedron")
    return {one_based({5, 11, 12, 17, 20}), one_based({6, 12, 13, 17, 18}), one_based({4, 11, 13, 17, 19}),
            one_based({5, 9, 12, 14, 18}),  one_based({6, 10, 13, 15, 19}), one_based({4, 8, 11, 16, 20}),
            one_based({1, 2, 7, 10, 15}),   one_based({2, 3, 7, 8, 16}),   one_based({1, 3, 7, 9, 14}),
            one_based({2, 4, 8, 15, 19}),   one_based({3, 5, 9, 16, 20}),  one_based({1, 6, 10, 14, 18})};
  throw Error(ErrorCode::UnknownSolid, "no reference vertex table for '" + solid + "'");
}

std::vector<std::vector<int>> plane_table(const std::string& solid) {
  std::vector<std::vector<int>> t;
  if (solid == "octahedron") {
    t = {{2, 4, 6}, {2, 3, 5}, {1, 4, 5}, {1, 3, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  } else if (solid == "icosahedron") {
    t = {{7, 9, 12}, {7, 8, 10}, {8, 9, 11}, {3, 6, 10}, {1, 4, 11}, {2, 5, 12}, {7, 8, 9},
         {6, 8, 10}, {4, 9, 11}, {5, 7, 12}, {1, 3, 6},  {1, 2, 4},  {2, 3, 5}, {4, 9, 12},
         {5, 7, 10}, {6, 8, 11}, {1, 2, 3},  {2, 4, 12}, {3, 5, 10}, {1, 6, 11}};
  } else {
    throw Error(ErrorCode::UnknownSolid, "no reference plane table for '" + solid + "'");
  }
  for (auto& r : t)
    for (auto& v : r) --v;
  return t;
}

Matrix icosahedral_relation_a() {
  Scalar a = kPhi + kInvPhi;
  Scalar h = -kHalf;
  return Matrix::from_rows({{h * a, h * kPhi, h * kInvPhi}, {h * kInvPhi, h * a, h * kPhi}, {h * kPhi, h * kInvPhi, h * a}});
}

Matrix icosahedral_relation_b() {
  return Matrix::from_rows({{kHalf * kInvPhi, -kHalf, -kHalf * kPhi},
                            {-kHalf * kPhi, kHalf * kInvPhi, -kHalf},
                            {-kHalf, -kHalf * kPhi, kHalf * kInvPhi}});
}

Vec octahedron_cone_kernel() { return {1, 1, -1, -1}; }

Vec octahedron_isotropy_as_printed() { return {0, 0, 1, 1, 0, 0, 1, 1}; }

Matrix octahedron_link_kernel() { return Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}); }

int icosahedron_link_vertex() { return 3; }

Vec icosahedron_cut_normal() { return {-2, Scalar(2) * kPhi, 0}; }

Scalar icosahedron_cut_offset() { return Scalar(2) / kPhi; }

Vec icosahedron_cut_point() {
  Scalar t = Scalar(2) + kPhi;
  return {Scalar(-1) / (kPhi * t), Scalar(1) / t, 0};
}

std::vector<int> icosahedron_pentagon() { return {0, 1, 8, 10, 11}; }

Matrix icosahedron_cone_kernel() {
  // (-phi s - t, phi(s + t), s, -s - phi t, t)
  return Matrix::from_rows({{-kPhi, kPhi, 1, -1, 0}, {-1, kPhi, 0, -kPhi, 1}});
}

Matrix icosahedron_link_kernel() {
  // (-phi r - phi s - t, r + phi s + phi t, s, -phi r - s - phi t, t)
  return Matrix::from_rows({{-kPhi, 1, 0, -kPhi, 0}, {-kPhi, kPhi, 1, -1, 0}, {-1, kPhi, 0, -kPhi, 1}});
}

LinearSystem icosahedron_link_system() {
  return {Matrix::from_rows({{kPhi, -1, 0, kPhi, 0}, {-kPhi, kPhi, 1, -1, 0}, {-1, kPhi, 0, -kPhi, 1}}),
          {Scalar(2) / kPhi, 0, 0}};
}

Scalar icosahedron_link_lambda() { return Scalar(-2) / (Scalar(2) + kPhi); }

std::vector<std::array<double, 2>> icosahedron_link_normals_numeric() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double r = std::sqrt(2.0 + phi);
  return {{-phi / r, 1.0 / phi}, {1.0 / (phi * r), 1.0}, {-phi / r, -1.0 / phi}, {2.0 / r, 0.0}, {1.0 / (phi * r), -1.0}};
}

Scalar icosahedron_fiber_period() { return Scalar(2) * kPhi; }

ChartGroupReference dodecahedron_chart_group() {
  // (phi(h+l), phi(h+k), phi(k+l))
  return {"dodecahedron", {-1, -1, -1}, one_based({1, 2, 3}), {{kPhi, kPhi, 0}, {0, kPhi, kPhi}, {kPhi, 0, kPhi}}};
}

ChartGroupReference icosahedron_chart_group() {
  // (-phi h, phi(h+k+2l), -phi k)
  return {"icosahedron", {}, one_based({5, 9, 14}), {{-kPhi, kPhi, 0}, {0, kPhi, -kPhi}, {0, Scalar(2) * kPhi, 0}}};
}

std::vector<AffineFormReference> octahedron_tau() {
  // indices and variables 0-based: s3 -> 2, s4 -> 3, s5 -> 4
  return {{0, 2, {{4, -1}}},
          {1, 2, {{2, -1}, {3, -1}, {4, 1}}},
          {5, 0, {{2, 1}, {3, 1}, {4, -1}}},
          {6, 2, {{2, -1}}},
          {7, 2, {{3, -1}}}};
}

IndexSet octahedron_tau_triple() { return one_based({3, 4, 5}); }

}  // namespace toricforge::reference
