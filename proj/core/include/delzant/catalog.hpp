// Named test polytopes shared by the CLI, the tests and the benchmarks.
#pragma once

#include "delzant/polyhedron.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace delzant::catalog {

LabelledPolyhedron interval(const Rational& a, const Rational& b);
LabelledPolyhedron unit_cube(std::size_t k);
LabelledPolyhedron standard_simplex(std::size_t k, const Rational& scale = 1);

// Square base [0,2]^2 at height 0, apex (1,1,1); the four slant facets meet
// at the apex, so the apex has four tight labels in codimension three.
LabelledPolyhedron egyptian_pyramid();

// {x >= 0, y >= 0, -x - 2y >= -2}: the weighted projective plane P(1,1,2).
LabelledPolyhedron weighted_triangle();

// Convex hull of a few random integer points in [0, extent]^dim, retried
// until full-dimensional.
LabelledPolyhedron random_lattice_polytope(std::mt19937_64& rng, std::size_t dim, int extent = 3);

struct NamedPolytope {
  std::string name;
  LabelledPolyhedron polytope;
};

// Unit cubes, standard simplices (dims 1-3), the pyramid, the weighted
// triangle and `random` seeded lattice polytopes of dims 1-3.
std::vector<NamedPolytope> test_polytopes(std::uint64_t seed = 0, std::size_t random = 20);

}  // namespace delzant::catalog
