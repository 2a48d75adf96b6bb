#pragma once

// Published presentations for the catalog solids, transcribed by hand. Used by
// the verifier to compare computed data against known results. Facet and
// vertex labels are 0-based here.

#include "toricforge/linalg.hpp"
#include "toricforge/polytope.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace toricforge::reference {

struct LinearSystem {
  Matrix B;
  Vec c;
};

// Level-set equations B s = c with s_j = |z_j|^2.
LinearSystem moment_system(const std::string& solid);
// Printed spanning vectors of the kernel (dodecahedron and icosahedron).
Matrix kernel_rows(const std::string& solid);

// Vertex/plane incidence, vertex i -> facets through it.
std::vector<IndexSet> vertex_table(const std::string& solid);
// Facet j -> vertices on it, as printed; the octahedron row for H5 is corrected.
std::vector<std::vector<int>> plane_table(const std::string& solid);

// Linear relations among V1..V10: rows of lhs = coeffs * (V4, V5, V6).
Matrix icosahedral_relation_a();  // (V1,V2,V3)
Matrix icosahedral_relation_b();  // (V8,V9,V10)

// Singular vertex data at the octahedron vertex nu1 (facets 3,4,5,6).
Vec octahedron_cone_kernel();          // in coordinates (3,4,5,6)
Vec octahedron_isotropy_as_printed();  // in R^8
Matrix octahedron_link_kernel();       // in coordinates (3,4,5,6)

// Icosahedron vertex nu4 (facets 5,9,12,14,18).
int icosahedron_link_vertex();  // 3, i.e. nu4
Vec icosahedron_cut_normal();
Scalar icosahedron_cut_offset();
Vec icosahedron_cut_point();
std::vector<int> icosahedron_pentagon();  // vertex ids of the link pentagon
Matrix icosahedron_cone_kernel();         // (s, t) rows
Matrix icosahedron_link_kernel();         // (r, s, t) rows
LinearSystem icosahedron_link_system();
Scalar icosahedron_link_lambda();         // -2/(2+phi)
// Display values of the projected normals in the orthonormal frame.
std::vector<std::array<double, 2>> icosahedron_link_normals_numeric();
Scalar icosahedron_fiber_period();        // 2 phi

// Chart groups: generators (h, k, l) of the printed parametrization.
struct ChartGroupReference {
  std::string solid;
  std::vector<int> vertex;  // empty when given by a triple only
  IndexSet triple;
  std::vector<Vec> generators;
};
ChartGroupReference dodecahedron_chart_group();
ChartGroupReference icosahedron_chart_group();

// tau_j = sqrt(constant + sum coeffs[i] s_i), octahedron nu1 with T = {3,4,5}.
struct AffineFormReference {
  int index;
  Scalar constant;
  std::map<int, Scalar> coeffs;
};
std::vector<AffineFormReference> octahedron_tau();
IndexSet octahedron_tau_triple();

}  // namespace toricforge::reference
