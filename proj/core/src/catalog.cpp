#include "delzant/catalog.hpp"

namespace delzant::catalog {

namespace {

IntVector unit(std::size_t k, std::size_t i, long sign) {
  IntVector v(k);
  v[i] = sign;
  return v;
}

}  // namespace

LabelledPolyhedron interval(const Rational& a, const Rational& b) {
  return LabelledPolyhedron(1, {Label({1}, a), Label({-1}, -b)});
}

LabelledPolyhedron unit_cube(std::size_t k) {
  LabelledPolyhedron p(k);
  for (std::size_t i = 0; i < k; ++i) {
    p.add(Label(unit(k, i, 1), 0));
    p.add(Label(unit(k, i, -1), -1));
  }
  return p;
}

LabelledPolyhedron standard_simplex(std::size_t k, const Rational& scale) {
  LabelledPolyhedron p(k);
  for (std::size_t i = 0; i < k; ++i) p.add(Label(unit(k, i, 1), 0));
  p.add(Label(IntVector(k, Integer(-1)), -scale));
  return p;
}

LabelledPolyhedron egyptian_pyramid() {
  return LabelledPolyhedron(3, {Label({0, 0, 1}, 0), Label({1, 0, -1}, 0), Label({-1, 0, -1}, -2),
                                Label({0, 1, -1}, 0), Label({0, -1, -1}, -2)});
}

LabelledPolyhedron weighted_triangle() {
  return LabelledPolyhedron(2, {Label({1, 0}, 0), Label({0, 1}, 0), Label({-1, -2}, -2)});
}

LabelledPolyhedron random_lattice_polytope(std::mt19937_64& rng, std::size_t dim, int extent) {
  std::uniform_int_distribution<int> coord(0, extent);
  for (;;) {
    std::vector<RationalVector> points(dim + 2);
    for (auto& p : points) {
      p.resize(dim);
      for (auto& x : p) x = coord(rng);
    }
    LabelledPolyhedron hull = convex_hull(points, dim);
    const auto lattice = face_lattice(hull);
    if (!lattice.empty() && lattice.faces.front().dim == dim) return hull;
  }
}

std::vector<NamedPolytope> test_polytopes(std::uint64_t seed, std::size_t random) {
  std::vector<NamedPolytope> out;
  for (std::size_t k = 1; k <= 3; ++k) out.push_back({"cube" + std::to_string(k), unit_cube(k)});
  for (std::size_t k = 1; k <= 3; ++k) out.push_back({"simplex" + std::to_string(k), standard_simplex(k)});
  out.push_back({"pyramid", egyptian_pyramid()});
  out.push_back({"weighted-triangle", weighted_triangle()});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random; ++i)
    out.push_back({"random" + std::to_string(i), random_lattice_polytope(rng, 1 + i % 3)});
  return out;
}

}  // namespace delzant::catalog
