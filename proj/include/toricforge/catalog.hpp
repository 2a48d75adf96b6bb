#pragma once

// Built-in data for the five regular polyhedra and their quasilattices.

#include "toricforge/polytope.hpp"
#include "toricforge/quasilattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricforge {

struct SolidEntry {
  std::string name;
  Polytope polytope;
  Quasilattice lattice;
  bool simple = false;
  bool rational = false;
  std::vector<std::pair<std::string, std::string>> annotations;
};

const std::vector<std::string>& solid_names();
// Facets <mu, X_j> >= -scale.
SolidEntry get_solid(const std::string& name, const Scalar& scale = Scalar(1));
// Named quasilattices: Z3, L, P, B.
Quasilattice named_quasilattice(const std::string& name);

// Vector lists as printed: tetrahedral Y_1..Y_4, dodecahedral Y_1..Y_6,
// icosahedral V_1..V_10.
std::vector<Vec> tetrahedral_vectors();
std::vector<Vec> dodecahedral_vectors();
std::vector<Vec> icosahedral_vectors();

struct DualityCheck {
  bool dodecahedron_normals_are_icosahedron_vertices = false;
  bool icosahedron_normals_along_dodecahedron_vertices = false;
  bool tetrahedron_normals_are_vertices = false;
  bool ok() const {
    return dodecahedron_normals_are_icosahedron_vertices && icosahedron_normals_along_dodecahedron_vertices &&
           tetrahedron_normals_are_vertices;
  }
};

DualityCheck duality_check();

}  // namespace toricforge
