#include "toricforge/charts.hpp"

#include "toricforge/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace toricforge {

Vec reduce_mod_integers(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.frac());
  return out;
}

bool contained_mod_integers(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty()) return true;
  std::size_t n = a.front().size();
  std::vector<Vec> gens = b;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vec(n, i));
  for (const auto& x : a)
    if (!zspan_coefficients(gens, x)) return false;
  return true;
}

bool same_group_mod_integers(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return contained_mod_integers(a, b) && contained_mod_integers(b, a);
}

namespace {

Matrix normals_of(const DelzantInput& input, const IndexSet& ids) {
  std::vector<Vec> cols;
  for (int j : ids) cols.push_back(input.polytope.normal(j));
  return Matrix::from_columns(cols, input.n());
}

IndexSet complement(std::size_t d, const IndexSet& t) {
  IndexSet out;
  for (int j = 0; j < static_cast<int>(d); ++j)
    if (!std::binary_search(t.begin(), t.end(), j)) out.push_back(j);
  return out;
}

void check_triple(const DelzantInput& input, const IndexSet& t) {
  if (t.size() != input.n()) throw Error(ErrorCode::DependentTriple, "chart needs exactly n facets");
  for (int j : t)
    if (j < 0 || j >= static_cast<int>(input.d())) throw Error(ErrorCode::InvalidArgument, "facet index out of range");
  if (determinant(normals_of(input, t)).is_zero())
    throw Error(ErrorCode::DependentTriple, "normals " + index_set_str(t) + " are dependent");
}

}  // namespace

ChartGroup chart_group(const DelzantInput& input, const IndexSet& triple) {
  IndexSet t = triple;
  std::sort(t.begin(), t.end());
  check_triple(input, t);
  Matrix inv = invert(normals_of(input, t));
  IndexSet rest = complement(input.d(), t);
  ChartGroup g;
  g.triple = t;
  g.source_map = Scalar(-1) * (inv * normals_of(input, rest));
  std::vector<Vec> raw;
  for (std::size_t k = 0; k < rest.size(); ++k) raw.push_back(g.source_map.col(k));
  // A disconnected N contributes the images of the lattice generators.
  if (!n_is_connected(input))
    for (const auto& q : input.lattice.generators()) raw.push_back(inv * q);
  for (const auto& v : raw) {
    Vec r = reduce_mod_integers(v);
    if (!is_zero(r)) g.generators.push_back(r);
  }
  return g;
}

IndexSet default_triple(const DelzantInput& input, int vertex) {
  const IndexSet& active = input.polytope.vertex_active(vertex);
  IndexSet found;
  for_each_subset(static_cast<int>(active.size()), static_cast<int>(input.n()), [&](const std::vector<int>& pick) {
    IndexSet t;
    for (int i : pick) t.push_back(active[static_cast<std::size_t>(i)]);
    if (determinant(normals_of(input, t)).is_zero()) return true;
    found = t;
    return false;
  });
  if (found.empty()) throw Error(ErrorCode::DependentTriple, "no independent triple at this vertex");
  return found;
}

Scalar AffineForm::eval(const Vec& s) const {
  Scalar v = constant;
  for (const auto& [i, c] : coeffs) v = v + c * s[static_cast<std::size_t>(i)];
  return v;
}

TauChart tau_chart(const DelzantInput& input, const MomentSystem& m, int vertex, const IndexSet& triple) {
  IndexSet t = triple;
  std::sort(t.begin(), t.end());
  check_triple(input, t);
  const IndexSet& active = input.polytope.vertex_active(vertex);
  if (!std::includes(active.begin(), active.end(), t.begin(), t.end()))
    throw Error(ErrorCode::NotLocalizable, "triple " + index_set_str(t) + " is not contained in the vertex's active set " +
                                               index_set_str(active));
  IndexSet rest = complement(input.d(), t);
  // B_rest s_rest = c - B_T s_T
  Matrix b_rest = m.B.select_columns(rest);
  Matrix b_t = m.B.select_columns(t);
  Matrix inv = invert(b_rest);
  Vec constant = inv * m.c;
  Matrix slope = Scalar(-1) * (inv * b_t);
  TauChart chart;
  chart.vertex = vertex;
  chart.triple = t;
  for (std::size_t a = 0; a < rest.size(); ++a) {
    AffineForm f;
    f.constant = constant[a];
    for (std::size_t b = 0; b < t.size(); ++b)
      if (!slope(a, b).is_zero()) f.coeffs[t[b]] = slope(a, b);
    if (f.coeffs.empty() && f.constant.is_zero())
      throw Error(ErrorCode::NotLocalizable, "dependent coordinate " + std::to_string(rest[a] + 1) + " vanishes identically");
    chart.dependent[rest[a]] = f;
    chart.domain.push_back({f, f.coeffs.size() == 1});
  }
  return chart;
}

namespace {

// Minimum set cover by branch and bound; elements are bits of a 64-bit mask.
// Lower bound: elements pairwise sharing no covering set need distinct sets.
struct CoverSearch {
  std::vector<std::uint64_t> sets;
  std::vector<std::vector<int>> owners;
  std::vector<int> best;
  std::vector<int> current;
  std::size_t nodes = 0;
  std::size_t node_limit = 2'000'000;
  bool exhausted = false;

  std::size_t packing_bound(std::uint64_t uncovered) const {
    std::vector<bool> used(sets.size(), false);
    std::size_t count = 0;
    for (int e = 0; e < 64; ++e) {
      if (!(uncovered >> e & 1)) continue;
      bool free = true;
      for (int s : owners[static_cast<std::size_t>(e)])
        if (used[static_cast<std::size_t>(s)]) free = false;
      if (!free) continue;
      ++count;
      for (int s : owners[static_cast<std::size_t>(e)]) used[static_cast<std::size_t>(s)] = true;
    }
    return count;
  }

  // For the elements with at most t covering sets, each needs a share
  // 1 / (largest number of them in one set); maximized over t.
  std::size_t fractional_bound(std::uint64_t uncovered) const {
    std::vector<std::size_t> thresholds;
    for (int e = 0; e < 64; ++e)
      if (uncovered >> e & 1) thresholds.push_back(owners[static_cast<std::size_t>(e)].size());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    std::size_t best_bound = 0;
    for (std::size_t t : thresholds) {
      std::uint64_t part = 0;
      for (int e = 0; e < 64; ++e)
        if ((uncovered >> e & 1) && owners[static_cast<std::size_t>(e)].size() <= t) part |= std::uint64_t{1} << e;
      Rational total = 0;
      for (int e = 0; e < 64; ++e) {
        if (!(part >> e & 1)) continue;
        int largest = 0;
        for (int o : owners[static_cast<std::size_t>(e)])
          largest = std::max(largest, std::popcount(sets[static_cast<std::size_t>(o)] & part));
        total += Rational(1, largest);
      }
      Integer ceil_total = -Scalar(-total).floor();
      best_bound = std::max(best_bound, static_cast<std::size_t>(ceil_total));
    }
    return best_bound;
  }

  void run(std::uint64_t uncovered) {
    if (exhausted) return;
    if (++nodes > node_limit) {
      exhausted = true;
      return;
    }
    if (uncovered == 0) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty() && current.size() + std::max(packing_bound(uncovered), fractional_bound(uncovered)) >= best.size())
      return;
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    for (int e = 0; e < 64; ++e) {
      if (!(uncovered >> e & 1)) continue;
      std::size_t count = owners[static_cast<std::size_t>(e)].size();
      if (count < fewest) {
        fewest = count;
        pick = e;
      }
    }
    if (fewest == 0) return;
    // larger gains first
    std::vector<int> order = owners[static_cast<std::size_t>(pick)];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return std::popcount(sets[static_cast<std::size_t>(x)] & uncovered) >
             std::popcount(sets[static_cast<std::size_t>(y)] & uncovered);
    });
    for (int i : order) {
      current.push_back(i);
      run(uncovered & ~sets[static_cast<std::size_t>(i)]);
      current.pop_back();
    }
  }
};

struct CoverResult {
  std::vector<int> choice;
  bool exact = true;
};

CoverResult minimum_cover(const std::vector<std::uint64_t>& sets, std::uint64_t universe) {
  // drop sets contained in another one
  std::vector<int> kept;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t a = sets[i] & universe;
    bool dominated = a == 0;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      std::uint64_t b = sets[j] & universe;
      if ((a & ~b) == 0 && (a != b || j < i)) dominated = true;
    }
    if (!dominated) kept.push_back(static_cast<int>(i));
  }
  CoverSearch s;
  for (int i : kept) s.sets.push_back(sets[static_cast<std::size_t>(i)] & universe);
  s.owners.assign(64, {});
  for (std::size_t i = 0; i < s.sets.size(); ++i)
    for (int e = 0; e < 64; ++e)
      if (s.sets[i] >> e & 1) s.owners[static_cast<std::size_t>(e)].push_back(static_cast<int>(i));
  s.run(universe);
  CoverResult r;
  for (int i : s.best) r.choice.push_back(kept[static_cast<std::size_t>(i)]);
  r.exact = !s.exhausted;
  return r;
}

std::vector<int> greedy_cover(const std::vector<std::vector<int>>& sets, std::size_t elements) {
  std::vector<bool> covered(elements, false);
  std::size_t left = elements;
  std::vector<int> out;
  while (left > 0) {
    int best = -1;
    std::size_t gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::size_t g = 0;
      for (int e : sets[i])
        if (!covered[static_cast<std::size_t>(e)]) ++g;
      if (g > gain) {
        gain = g;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    for (int e : sets[static_cast<std::size_t>(best)])
      if (!covered[static_cast<std::size_t>(e)]) {
        covered[static_cast<std::size_t>(e)] = true;
        --left;
      }
    out.push_back(best);
  }
  return out;
}

}  // namespace

std::vector<ChartId> admissible_charts(const DelzantInput& input) {
  const Polytope& p = input.polytope;
  const int k = static_cast<int>(input.n());
  std::vector<ChartId> out;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    const IndexSet& active = p.vertex_active(v);
    for_each_subset(static_cast<int>(active.size()), k, [&](const std::vector<int>& pick) {
      IndexSet t;
      for (int i : pick) t.push_back(active[static_cast<std::size_t>(i)]);
      if (!determinant(normals_of(input, t)).is_zero()) out.push_back({v, t});
      return true;
    });
  }
  return out;
}

AtlasReport atlas_enumerate(const DelzantInput& input) {
  if (input.n() != 3) throw Error(ErrorCode::DimMismatch, "atlas enumeration needs a 3-polytope");
  const Polytope& p = input.polytope;
  AtlasReport r;
  const int nv = static_cast<int>(p.vertices().size());
  r.charts = admissible_charts(input);
  // Regular faces are the support patterns of the regular part.
  std::vector<const Face*> regular;
  for (const auto& f : p.faces())
    if (f.kind == FaceKind::Regular) regular.push_back(&f);
  r.patterns = regular.size();
  auto covers = [](const ChartId& c, const Face& f) {
    return std::includes(c.triple.begin(), c.triple.end(), f.active.begin(), f.active.end());
  };

  // Around each vertex: the regular faces whose closure contains it.
  for (int v = 0; v < nv; ++v) {
    std::vector<const Face*> near;
    for (const Face* f : regular)
      if (std::binary_search(f->vertex_ids.begin(), f->vertex_ids.end(), v) && !f->active.empty()) near.push_back(f);
    std::vector<std::uint64_t> sets;
    for (const auto& c : r.charts) {
      if (c.vertex != v) continue;
      std::uint64_t mask = 0;
      for (std::size_t e = 0; e < near.size(); ++e)
        if (covers(c, *near[e])) mask |= std::uint64_t{1} << e;
      sets.push_back(mask);
    }
    std::uint64_t universe = near.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << near.size()) - 1;
    if (near.size() > 64) throw Error(ErrorCode::InvalidArgument, "too many faces around a vertex");
    CoverResult local = minimum_cover(sets, universe);
    r.local_cover += local.choice.size();
    r.exact = r.exact && local.exact;
  }

  std::vector<std::vector<int>> sets;
  for (const auto& c : r.charts) {
    std::vector<int> s;
    for (std::size_t e = 0; e < regular.size(); ++e)
      if (covers(c, *regular[e])) s.push_back(static_cast<int>(e));
    sets.push_back(s);
  }
  std::vector<int> choice;
  if (regular.size() <= 64) {
    std::vector<std::uint64_t> masks;
    for (const auto& s : sets) {
      std::uint64_t m = 0;
      for (int e : s) m |= std::uint64_t{1} << e;
      masks.push_back(m);
    }
    std::uint64_t universe = regular.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << regular.size()) - 1;
    CoverResult global = minimum_cover(masks, universe);
    choice = global.choice;
    r.exact = r.exact && global.exact;
    if (!global.exact) {
      std::vector<int> g = greedy_cover(sets, regular.size());
      if (choice.empty() || g.size() < choice.size()) choice = g;
    }
  } else {
    choice = greedy_cover(sets, regular.size());
    r.exact = false;
  }
  r.global_cover = choice.size();
  for (int i : choice) r.global_choice.push_back(r.charts[static_cast<std::size_t>(i)]);
  return r;
}

}  // namespace toricforge
