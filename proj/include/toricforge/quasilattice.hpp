#pragma once

// Quasilattices: Z-spans of R-spanning vector lists.

#include "toricforge/polytope.hpp"
#include "toricforge/zmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricforge {

class Quasilattice {
 public:
  Quasilattice() = default;
  Quasilattice(std::vector<Vec> generators, std::string name = "");
  static Quasilattice standard(std::size_t n);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> gens_;
  std::string name_;
};

// Integer coefficients c with sum c_i g_i = v.
using MembershipCertificate = IntVec;

std::optional<MembershipCertificate> member(const Quasilattice& q, const Vec& v);
bool verify_certificate(const Quasilattice& q, const Vec& v, const MembershipCertificate& c);
bool is_lattice(const Quasilattice& q);
bool same_quasilattice(const Quasilattice& a, const Quasilattice& b);
// Index [Z^n : Q] for a full-rank lattice contained in Z^n.
std::optional<Integer> lattice_index_in_standard(const Quasilattice& q);

struct QuasirationalityReport {
  std::vector<std::optional<MembershipCertificate>> certificates;  // per facet
  bool ok() const;
  std::vector<int> failures() const;
};

QuasirationalityReport is_quasirational(const HPolytope& h, const Quasilattice& q);

// Images of generators under projection along `direction` onto the span of
// the rows of `plane_basis`, in plane_basis coordinates; zero images dropped.
Quasilattice project(const Quasilattice& q, const Matrix& plane_basis, const Vec& direction);

}  // namespace toricforge
