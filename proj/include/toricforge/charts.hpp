#pragma once

// Local charts of the quotient: chart groups at facet triples, square-root
// charts on the level set, and atlas enumeration.

#include "toricforge/delzant.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricforge {

// Each coordinate reduced into [0, 1).
Vec reduce_mod_integers(const Vec& v);
// Every element of a lies in span_Z(b) + Z^n.
bool contained_mod_integers(const std::vector<Vec>& a, const std::vector<Vec>& b);
bool same_group_mod_integers(const std::vector<Vec>& a, const std::vector<Vec>& b);

struct ChartGroup {
  IndexSet triple;
  Matrix source_map;            // -X_T^{-1} X_{T^c}, one column per complementary facet
  std::vector<Vec> generators;  // reduced mod Z^3, zero vectors dropped
  bool trivial() const { return generators.empty(); }
};

// Throws DEPENDENT_TRIPLE if the normals indexed by T are dependent.
ChartGroup chart_group(const DelzantInput& input, const IndexSet& triple);
// First independent triple inside I_v in lexicographic order.
IndexSet default_triple(const DelzantInput& input, int vertex);

// constant + sum coeffs[i] s_i
struct AffineForm {
  Scalar constant;
  std::map<int, Scalar> coeffs;
  Scalar eval(const Vec& s) const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct DomainInequality {
  AffineForm form;  // form > 0
  bool bound;       // single variable: s_i < const
};

struct TauChart {
  int vertex = 0;
  IndexSet triple;
  std::map<int, AffineForm> dependent;  // tau_j = sqrt(form), j not in T
  std::vector<DomainInequality> domain;
};

// Throws DEPENDENT_TRIPLE, or NOT_LOCALIZABLE if T is not inside I_v or a
// dependent form vanishes identically.
TauChart tau_chart(const DelzantInput& input, const MomentSystem& m, int vertex, const IndexSet& triple);

struct ChartId {
  int vertex;
  IndexSet triple;
};

struct AtlasReport {
  std::vector<ChartId> charts;        // all admissible (vertex, triple) pairs
  std::size_t patterns = 0;           // support patterns of the regular part
  std::size_t local_cover = 0;        // sum over vertices of the minimal cover of the faces around it
  std::size_t global_cover = 0;       // minimal number of charts covering every regular pattern
  bool exact = true;                  // false if the global cover fell back to greedy
  std::vector<ChartId> global_choice;
};

// (vertex, triple) pairs with T inside I_v and X_T independent.
std::vector<ChartId> admissible_charts(const DelzantInput& input);
AtlasReport atlas_enumerate(const DelzantInput& input);

}  // namespace toricforge
