#pragma once

// Local structure near singular vertices: the cone model, the cutting plane,
// the link polytope and the fiber of the link quotient over the cone quotient.

#include "toricforge/charts.hpp"
#include "toricforge/delzant.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toricforge {

std::vector<int> singular_vertices(const Polytope& p);

struct ConeModel {
  int vertex = 0;
  IndexSet active;                  // I_v; local coordinate k is facet active[k]
  Matrix pi;                        // n x |I|, columns X_j
  Matrix kernel;                    // rows: reduced basis of ker pi
  std::vector<Vec> component_gens;  // x in [0,1)^|I| with pi x in Q but not in span_Z X_I
  std::vector<Vec> lattice;         // generators of Q
};

ConeModel cone_at_vertex(const DelzantInput& input, int vertex);
// Component groups agree: span_Z(X_I, pi(a)) == span_Z(X_I, pi(b)).
bool same_component_group(const ConeModel& cone, const std::vector<Vec>& reps);

struct PlaneOverride {
  std::optional<Vec> normal;
  std::optional<Scalar> offset;
  std::optional<Vec> point;
  std::optional<Matrix> plane_basis;  // (n-1) x n rows
};

struct CuttingPlane {
  int vertex = 0;
  Vec normal;           // X_nu, in Q, maximal at the vertex
  Scalar offset;        // plane <mu, X_nu> = offset
  Vec point;            // xi on the plane
  Matrix plane_basis;   // rows orthogonal to X_nu
  Scalar vertex_value;  // <vertex, X_nu>
  Scalar adjacent_value;
};

// Throws NO_SEPARATION if the plane does not cut off the vertex alone.
CuttingPlane cutting_plane(const DelzantInput& input, int vertex, const PlaneOverride& o = {});

struct LinkModel {
  CuttingPlane plane;
  IndexSet facets;  // link facet k comes from facet facets[k]
  DelzantInput input;
  DelzantData data;
  Matrix frame_free_kernel;  // rows: {x : pi_C x parallel to X_nu}
  std::vector<std::array<double, 2>> numeric_normals;  // in an orthonormal frame of the plane
};

LinkModel link_at_vertex(const DelzantInput& input, int vertex, const PlaneOverride& o = {});

struct FiberReport {
  Vec w;                // direction of ker pi_L modulo ker pi_C
  RealSubgroup group;   // in units of w
  RealSubgroup connected_group;  // same, ignoring extra components of N(C)
  std::optional<Scalar> rational_generator;  // G intersected with Q (dense case)
  std::optional<Scalar> phi_generator;       // G intersected with Q*phi (dense case)
  std::string presentation;
};

// Throws DIM_MISMATCH unless ker pi_L exceeds ker pi_C by one dimension, and
// INVALID_ARGUMENT for a w outside ker pi_L or inside ker pi_C. The default w
// solves pi_C w = u for the shortest member u of Q on the ray through X_nu:
// the generator when that set is discrete, else its Minkowski-shortest element.
FiberReport fiber_group(const ConeModel& cone, const LinkModel& link, const std::optional<Vec>& w = {});

struct FaceStratum {
  IndexSet active;
  int face_dim = 0;
  int stratum_dim = 0;
  bool singular = false;
};

struct SingularVertexReport {
  int vertex = 0;
  ConeModel cone;
  CuttingPlane plane;
  IndexSet link_facets;
  std::vector<Vec> link_normals;
  std::vector<Scalar> link_lambdas;
  Quasilattice link_lattice;
  FiberReport fiber;
  Vec moment_coordinates;  // s at the vertex; zero exactly on I_v
};

struct StratificationReport {
  std::string kind;  // manifold, orbifold or quasifold
  int regular_dim = 0;
  std::vector<FaceStratum> strata;
  std::vector<SingularVertexReport> singular;
  std::vector<std::pair<ChartId, ChartGroup>> simple_vertex_groups;
};

StratificationReport stratification_report(const DelzantInput& input);

}  // namespace toricforge
