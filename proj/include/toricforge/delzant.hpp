#pragma once

// Data of the generalized Delzant construction and its complex counterpart.

#include "toricforge/polytope.hpp"
#include "toricforge/quasilattice.hpp"

#include <string>
#include <vector>

namespace toricforge {

struct DelzantInput {
  Polytope polytope;
  Quasilattice lattice;
  std::vector<MembershipCertificate> certificates;  // X_j in the lattice generators

  // Throws NOT_QUASIRATIONAL if some normal is not in the lattice.
  static DelzantInput make(Polytope p, Quasilattice q);
  std::size_t n() const { return static_cast<std::size_t>(polytope.dim()); }
  std::size_t d() const { return polytope.num_facets(); }
};

struct KernelData {
  Matrix pi;     // n x d, column j = X_j
  Matrix basis;  // (d-n) x d, rows span ker pi, in reduced row echelon form
};

// Points of the level set satisfy B s = c with s_j = |z_j|^2 >= 0.
struct MomentSystem {
  Matrix B;
  Vec c;
};

struct ComplexModel {
  std::vector<IndexSet> vertex_patterns;  // I_mu per vertex
  bool admissible(const IndexSet& zero_set) const;
};

struct DelzantData {
  KernelData kernel;
  MomentSystem moment;
  ComplexModel model;
};

DelzantData build(const DelzantInput& input);

bool kernel_presentation_matches(const KernelData& k, const Matrix& reference_rows);
// Row spaces of the augmented systems [B | c] agree.
bool moment_system_matches(const MomentSystem& m, const Matrix& reference_b, const Vec& reference_c);
bool n_is_connected(const DelzantInput& input);
// lhs_i == sum_k coeffs(i, k) rhs_k for every i.
bool relation_check(const std::vector<Vec>& lhs, const Matrix& coeffs, const std::vector<Vec>& rhs);

bool orbit_is_closed(const ComplexModel& model, const std::vector<Face>& faces, const IndexSet& zero_set);
const Face& closed_orbit_in_closure(const Polytope& p, const ComplexModel& model, const IndexSet& zero_set);

// Rows: basis of { v in ker pi : v_j = 0 for j outside I_F }.
Matrix isotropy_algebra(const KernelData& k, const Face& f);

// s(mu)_j = <mu, X_j> - lambda_j
Vec moment_coordinates(const Polytope& p, const Vec& mu);

struct MomentIdentityReport {
  bool annihilates = false;     // B * Pi^T = 0
  bool injective = false;       // rank Pi = n
  bool vertices_match = false;  // BFS vertices of {s >= 0, Bs = c} = s(vertices)
  std::size_t bfs_count = 0;
  bool ok() const { return annihilates && injective && vertices_match; }
};

MomentIdentityReport moment_polytope_identity(const MomentSystem& m, const DelzantInput& input);

// Float precision in bits: <= 53 double, <= 113 quad, otherwise 100 decimal digits.
int default_precision();

struct LevelSetSample {
  std::vector<double> s;        // |z_j|^2 as evaluated
  double max_residual = 0;      // max_i |(B s - c)_i|
  int precision = 53;
};

// Throws OUT_OF_POLYTOPE if mu is outside the polytope.
LevelSetSample sample_level_set(const MomentSystem& m, const DelzantInput& input, const Vec& mu,
                                const std::vector<double>& phases = {}, int precision = 0);

}  // namespace toricforge
