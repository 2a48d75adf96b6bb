#pragma once

// Verification suites: per-instance checks against exact identities and the
// published data, and the numbered acceptance criteria.

#include "toricforge/delzant.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toricforge {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  bool pass() const;
};

struct VerifyOptions {
  double tol = 1e-9;
  std::uint64_t seed = 20240601;
  int samples = 100;
  int precision = 0;  // 0: default_precision()
};

// Checks that hold for any input: quasirationality, the moment identity and
// float residuals at random interior points.
std::vector<Check> verify_instance(const DelzantInput& input, const VerifyOptions& o);
// verify_instance plus the published data for a catalog solid.
std::vector<Check> verify_solid(const std::string& name, const VerifyOptions& o);
std::vector<CriterionResult> acceptance_criteria(const VerifyOptions& o);

// Random interior points: positive rational combinations of the vertices.
std::vector<Vec> random_interior_points(const Polytope& p, int count, std::uint64_t seed);

std::string vec_str(const Vec& v);

}  // namespace toricforge
