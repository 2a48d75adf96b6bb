// One PASS/FAIL line per acceptance criterion, followed by the individual checks.

#include "toricforge/verify.hpp"

#include <chrono>
#include <iostream>

int main() {
  using namespace toricforge;
  auto start = std::chrono::steady_clock::now();
  VerifyOptions o;
  o.tol = 1e-9;
  auto results = acceptance_criteria(o);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << "\n";
    for (const auto& c : r.checks)
      std::cout << "        [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " -- " + c.detail)
                << "\n";
    failed += r.pass() ? 0 : 1;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed in "
            << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
