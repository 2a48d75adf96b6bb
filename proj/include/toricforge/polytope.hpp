#pragma once

// Half-space and vertex descriptions, face lattices and the simple/singular split.

#include "toricforge/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toricforge {

// Sorted, 0-based facet indices.
using IndexSet = std::vector<int>;

struct HalfSpace {
  Vec normal;     // X
  Scalar lambda;  // { mu : <mu, X> >= lambda }
};

struct HPolytope {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;
};

struct VPolytope {
  int dim = 0;
  std::vector<Vec> vertices;
};

enum class FaceKind { Regular, Singular };

struct Face {
  IndexSet active;  // I_F
  int dim = 0;
  std::vector<int> vertex_ids;
  FaceKind kind = FaceKind::Regular;
  std::size_t rank() const { return active.size(); }
};

// Calls f on every k-subset of {0..n-1} in lexicographic order; f returns false to stop.
void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f);

VPolytope vertices_from_halfspaces(const HPolytope& h);
HPolytope halfspaces_from_vertices(const VPolytope& v);

// Validated polytope: bounded, full-dimensional, irredundant. Vertex and face
// data are computed once.
class Polytope {
 public:
  explicit Polytope(HPolytope h, const std::optional<std::vector<Vec>>& vertex_order = std::nullopt);
  static Polytope from_vertices(const VPolytope& v);

  const HPolytope& h() const { return h_; }
  int dim() const { return h_.dim; }
  std::size_t num_facets() const { return h_.halfspaces.size(); }
  const Vec& normal(int j) const { return h_.halfspaces[static_cast<std::size_t>(j)].normal; }
  const Scalar& lambda(int j) const { return h_.halfspaces[static_cast<std::size_t>(j)].lambda; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const IndexSet& vertex_active(int v) const { return vertex_active_[static_cast<std::size_t>(v)]; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& vertex_face(int v) const;
  std::vector<int> facet_vertices(int j) const;
  std::vector<int> adjacent_vertices(int v) const;
  std::optional<int> find_vertex(const Vec& mu) const;

  // <mu, X_j> - lambda_j
  Scalar slack(const Vec& mu, int j) const;
  bool contains(const Vec& mu) const;
  bool is_simple() const;
  const Face& face_from_active_set(const IndexSet& j) const;
  std::vector<int> singular_face_ids() const;

 private:
  HPolytope h_;
  std::vector<Vec> vertices_;
  std::vector<IndexSet> vertex_active_;
  std::vector<std::uint64_t> facet_vertex_mask_;
  std::vector<Face> faces_;
  std::vector<int> vertex_face_id_;
};

std::vector<Face> face_lattice(const HPolytope& h);
bool is_simple(const HPolytope& h);
// F <= G iff I_G is a subset of I_F.
bool face_less_equal(const Face& f, const Face& g);
// True iff the normals can be rescaled (positively) into a common lattice.
bool is_rational(const HPolytope& h);
std::size_t affine_rank(const std::vector<Vec>& points);
std::string index_set_str(const IndexSet& s, int base = 1);

}  // namespace toricforge
