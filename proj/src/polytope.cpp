#include "toricforge/polytope.hpp"

#include "toricforge/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace toricforge {

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!f(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::size_t affine_rank(const std::vector<Vec>& points) {
  if (points.size() <= 1) return 0;
  Matrix m(0, points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i) m.append_row(points[i] - points.front());
  return rank(m);
}

std::string index_set_str(const IndexSet& s, int base) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + base);
  }
  return out + "}";
}

namespace {

void check_shape(const HPolytope& h) {
  if (h.dim < 1) throw Error(ErrorCode::DimMismatch, "ambient dimension must be positive");
  if (h.halfspaces.size() > 64) throw Error(ErrorCode::InvalidArgument, "at most 64 half-spaces are supported");
  for (std::size_t j = 0; j < h.halfspaces.size(); ++j) {
    const auto& hs = h.halfspaces[j];
    if (hs.normal.size() != static_cast<std::size_t>(h.dim))
      throw Error(ErrorCode::DimMismatch, "half-space " + std::to_string(j + 1) + " has wrong length");
    if (is_zero(hs.normal))
      throw Error(ErrorCode::Degenerate, "half-space " + std::to_string(j + 1) + " has zero normal");
  }
}

Matrix normal_rows(const HPolytope& h, const std::vector<int>& ids) {
  Matrix m(0, static_cast<std::size_t>(h.dim));
  for (int j : ids) m.append_row(h.halfspaces[static_cast<std::size_t>(j)].normal);
  return m;
}

bool feasible(const HPolytope& h, const Vec& mu) {
  for (const auto& hs : h.halfspaces)
    if (dot(mu, hs.normal) < hs.lambda) return false;
  return true;
}

// Scale so that lambda is +-1, or the first nonzero coordinate has magnitude 1.
HalfSpace normalized(HalfSpace hs) {
  Scalar s;
  if (!hs.lambda.is_zero()) {
    s = hs.lambda.abs();
  } else {
    for (const auto& x : hs.normal)
      if (!x.is_zero()) {
        s = x.abs();
        break;
      }
  }
  Scalar inv = s.inverse();
  hs.normal = inv * hs.normal;
  hs.lambda = inv * hs.lambda;
  return hs;
}

}  // namespace

VPolytope vertices_from_halfspaces(const HPolytope& h) {
  check_shape(h);
  const int n = h.dim;
  const int d = static_cast<int>(h.halfspaces.size());
  std::vector<int> all(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) all[static_cast<std::size_t>(j)] = j;
  if (static_cast<int>(rank(normal_rows(h, all))) < n)
    throw Error(ErrorCode::Unbounded, "normals do not span the dual space; the region contains a line");

  VPolytope out{n, {}};
  for_each_subset(d, n, [&](const std::vector<int>& ids) {
    Matrix m = normal_rows(h, ids);
    if (determinant(m).is_zero()) return true;
    Vec rhs;
    for (int j : ids) rhs.push_back(h.halfspaces[static_cast<std::size_t>(j)].lambda);
    Vec mu = *solve(m, rhs);
    if (!feasible(h, mu)) return true;
    if (std::find(out.vertices.begin(), out.vertices.end(), mu) == out.vertices.end())
      out.vertices.push_back(std::move(mu));
    return true;
  });
  if (out.vertices.empty()) throw Error(ErrorCode::Empty, "no feasible point");

  // A nonzero recession direction of a pointed region lies on an extreme ray,
  // cut out by n-1 independent normals.
  for_each_subset(d, n - 1, [&](const std::vector<int>& ids) {
    Matrix m = normal_rows(h, ids);
    if (static_cast<int>(rank(m)) != n - 1) return true;
    Vec y = kernel_basis(m).row(0);
    bool nonneg = true, nonpos = true;
    for (const auto& hs : h.halfspaces) {
      int s = dot(y, hs.normal).sign();
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg || nonpos) throw Error(ErrorCode::Unbounded, "recession direction found");
    return true;
  });
  return out;
}

HPolytope halfspaces_from_vertices(const VPolytope& v) {
  if (v.vertices.empty()) throw Error(ErrorCode::Empty, "no vertices");
  const int n = v.dim;
  const int nv = static_cast<int>(v.vertices.size());
  if (nv > 64) throw Error(ErrorCode::InvalidArgument, "at most 64 vertices are supported");
  for (const auto& p : v.vertices)
    if (p.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::DimMismatch, "vertex has wrong length");
  if (static_cast<int>(affine_rank(v.vertices)) != n)
    throw Error(ErrorCode::Degenerate, "vertices are not full-dimensional");

  HPolytope out{n, {}};
  std::set<std::uint64_t> seen;
  for_each_subset(nv, n, [&](const std::vector<int>& ids) {
    Matrix diff(0, static_cast<std::size_t>(n));
    const Vec& p0 = v.vertices[static_cast<std::size_t>(ids[0])];
    for (std::size_t i = 1; i < ids.size(); ++i) diff.append_row(v.vertices[static_cast<std::size_t>(ids[i])] - p0);
    if (static_cast<int>(rank(diff)) != n - 1) return true;
    Vec x = kernel_basis(diff).row(0);
    Scalar lam = dot(p0, x);
    bool ge = true, le = true;
    std::uint64_t mask = 0;
    for (int k = 0; k < nv; ++k) {
      int s = (dot(v.vertices[static_cast<std::size_t>(k)], x) - lam).sign();
      if (s < 0) ge = false;
      if (s > 0) le = false;
      if (s == 0) mask |= std::uint64_t{1} << k;
    }
    if (!ge && !le) return true;
    if (!seen.insert(mask).second) return true;
    if (!ge) {
      x = Scalar(-1) * x;
      lam = -lam;
    }
    out.halfspaces.push_back(normalized({x, lam}));
    return true;
  });
  return out;
}

Polytope::Polytope(HPolytope h, const std::optional<std::vector<Vec>>& vertex_order) : h_(std::move(h)) {
  VPolytope v = vertices_from_halfspaces(h_);
  const int n = h_.dim;
  if (static_cast<int>(affine_rank(v.vertices)) != n)
    throw Error(ErrorCode::Degenerate, "polytope is not full-dimensional");
  if (vertex_order) {
    if (vertex_order->size() != v.vertices.size())
      throw Error(ErrorCode::InvalidArgument, "given vertex list does not match the half-spaces");
    for (const auto& p : *vertex_order)
      if (std::find(v.vertices.begin(), v.vertices.end(), p) == v.vertices.end())
        throw Error(ErrorCode::InvalidArgument, "given vertex is not a vertex of the half-space description");
    vertices_ = *vertex_order;
  } else {
    vertices_ = std::move(v.vertices);
  }
  if (vertices_.size() > 64) throw Error(ErrorCode::InvalidArgument, "at most 64 vertices are supported");

  const std::size_t d = h_.halfspaces.size();
  vertex_active_.resize(vertices_.size());
  facet_vertex_mask_.assign(d, 0);
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    for (std::size_t j = 0; j < d; ++j)
      if (dot(vertices_[k], h_.halfspaces[j].normal) == h_.halfspaces[j].lambda) {
        vertex_active_[k].push_back(static_cast<int>(j));
        facet_vertex_mask_[j] |= std::uint64_t{1} << k;
      }

  std::map<std::uint64_t, std::size_t> first_owner;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Vec> pts;
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      if (facet_vertex_mask_[j] >> k & 1) pts.push_back(vertices_[k]);
    if (pts.size() < static_cast<std::size_t>(n) || static_cast<int>(affine_rank(pts)) != n - 1)
      throw Error(ErrorCode::Redundant, "half-space " + std::to_string(j + 1) + " does not support a facet");
    auto [it, fresh] = first_owner.emplace(facet_vertex_mask_[j], j);
    if (!fresh)
      throw Error(ErrorCode::Redundant, "half-spaces " + std::to_string(it->second + 1) + " and " +
                                            std::to_string(j + 1) + " define the same facet");
  }

  // Vertex sets of faces: closure of facet vertex sets under intersection.
  std::uint64_t full = vertices_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << vertices_.size()) - 1);
  std::set<std::uint64_t> sets{full};
  std::vector<std::uint64_t> frontier{full};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier)
      for (auto f : facet_vertex_mask_) {
        std::uint64_t t = s & f;
        if (t && sets.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  for (auto s : sets) {
    Face face;
    std::vector<Vec> pts;
    std::vector<bool> active(d, true);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (!(s >> k & 1)) continue;
      face.vertex_ids.push_back(static_cast<int>(k));
      pts.push_back(vertices_[k]);
      std::vector<bool> here(d, false);
      for (int j : vertex_active_[k]) here[static_cast<std::size_t>(j)] = true;
      for (std::size_t j = 0; j < d; ++j) active[j] = active[j] && here[j];
    }
    for (std::size_t j = 0; j < d; ++j)
      if (active[j]) face.active.push_back(static_cast<int>(j));
    face.dim = static_cast<int>(affine_rank(pts));
    face.kind = static_cast<int>(face.active.size()) > n - face.dim ? FaceKind::Singular : FaceKind::Regular;
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  vertex_face_id_.assign(vertices_.size(), -1);
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == 0) vertex_face_id_[static_cast<std::size_t>(faces_[i].vertex_ids[0])] = static_cast<int>(i);
}

Polytope Polytope::from_vertices(const VPolytope& v) {
  return Polytope(halfspaces_from_vertices(v), v.vertices);
}

const Face& Polytope::vertex_face(int v) const {
  return faces_[static_cast<std::size_t>(vertex_face_id_.at(static_cast<std::size_t>(v)))];
}

std::vector<int> Polytope::facet_vertices(int j) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (facet_vertex_mask_.at(static_cast<std::size_t>(j)) >> k & 1) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> Polytope::adjacent_vertices(int v) const {
  std::vector<int> out;
  for (const auto& f : faces_) {
    if (f.dim != 1) continue;
    if (f.vertex_ids.size() != 2) continue;
    if (f.vertex_ids[0] == v) out.push_back(f.vertex_ids[1]);
    if (f.vertex_ids[1] == v) out.push_back(f.vertex_ids[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> Polytope::find_vertex(const Vec& mu) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (vertices_[k] == mu) return static_cast<int>(k);
  return std::nullopt;
}

Scalar Polytope::slack(const Vec& mu, int j) const { return dot(mu, normal(j)) - lambda(j); }

bool Polytope::contains(const Vec& mu) const { return feasible(h_, mu); }

bool Polytope::is_simple() const {
  for (const auto& a : vertex_active_)
    if (static_cast<int>(a.size()) != h_.dim) return false;
  return true;
}

const Face& Polytope::face_from_active_set(const IndexSet& j) const {
  std::uint64_t mask = vertices_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << vertices_.size()) - 1);
  for (int f : j) {
    if (f < 0 || static_cast<std::size_t>(f) >= num_facets())
      throw Error(ErrorCode::InvalidArgument, "facet index out of range");
    mask &= facet_vertex_mask_[static_cast<std::size_t>(f)];
  }
  if (mask == 0) throw Error(ErrorCode::EmptyFace, "no point of the polytope activates " + index_set_str(j));
  for (const auto& face : faces_) {
    std::uint64_t m = 0;
    for (int k : face.vertex_ids) m |= std::uint64_t{1} << k;
    if (m == mask) return face;
  }
  throw Error(ErrorCode::EmptyFace, "active set does not determine a face");
}

std::vector<int> Polytope::singular_face_ids() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].kind == FaceKind::Singular) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Face> face_lattice(const HPolytope& h) { return Polytope(h).faces(); }

bool is_simple(const HPolytope& h) { return Polytope(h).is_simple(); }

bool face_less_equal(const Face& f, const Face& g) {
  return std::includes(f.active.begin(), f.active.end(), g.active.begin(), g.active.end());
}

bool is_rational(const HPolytope& h) {
  const std::size_t n = static_cast<std::size_t>(h.dim);
  // Pick n independent normals as a basis.
  std::vector<int> basis;
  Matrix acc(0, n);
  for (std::size_t j = 0; j < h.halfspaces.size() && basis.size() < n; ++j) {
    Matrix trial = acc;
    trial.append_row(h.halfspaces[j].normal);
    if (rank(trial) > acc.rows()) {
      acc = trial;
      basis.push_back(static_cast<int>(j));
    }
  }
  if (basis.size() < n) return false;
  Matrix cols = acc.transpose();
  // Rescaling factors c_k, known modulo Q*: after mapping c_k X_k to e_k every
  // normal must become a real multiple of a rational vector.
  std::vector<std::optional<Scalar>> c(n);
  struct Edge {
    std::size_t k, l;
    Scalar ratio;  // c_l must equal c_k * ratio modulo Q*
  };
  std::vector<Edge> edges;
  for (const auto& hs : h.halfspaces) {
    Vec a = *solve(cols, hs.normal);
    std::optional<std::size_t> first;
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k].is_zero()) continue;
      if (!first) {
        first = k;
        continue;
      }
      edges.push_back({*first, k, a[*first] / a[k]});
    }
  }
  bool changed = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (c[k]) continue;
    c[k] = Scalar(1);
    changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : edges) {
        if (c[e.k] && !c[e.l]) {
          c[e.l] = *c[e.k] * e.ratio;
          changed = true;
        } else if (!c[e.k] && c[e.l]) {
          c[e.k] = *c[e.l] / e.ratio;
          changed = true;
        }
      }
    }
  }
  for (const auto& e : edges)
    if (!(*c[e.l] / (*c[e.k] * e.ratio)).is_rational()) return false;
  return true;
}

}  // namespace toricforge
