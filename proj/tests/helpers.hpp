#pragma once

#include "toricforge/linalg.hpp"
#include "toricforge/polytope.hpp"

#include <initializer_list>

namespace testing {

// 1-based facet labels to 0-based index set.
inline toricforge::IndexSet ids(std::initializer_list<int> one_based) {
  toricforge::IndexSet s;
  for (int i : one_based) s.push_back(i - 1);
  return s;
}

inline toricforge::Scalar phi() { return toricforge::Scalar::phi(); }
inline toricforge::Scalar inv_phi() { return toricforge::Scalar::phi() - 1; }
inline toricforge::Scalar S(const char* text) { return toricforge::Scalar::parse(text); }

}  // namespace testing
