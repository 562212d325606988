#include "doctest.h"

#include "delzant/catalog.hpp"
#include "delzant/subdivision.hpp"

#include <random>
#include <sstream>

using namespace delzant;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Subdivision line_split(long at) { return hyperplane_split({1}, {q(at)}); }

LabelledPolyhedron box(const RationalVector& lo, const RationalVector& hi) {
  LabelledPolyhedron p(lo.size());
  for (std::size_t j = 0; j < lo.size(); ++j) {
    IntVector e(lo.size()), f(lo.size());
    e[j] = 1;
    f[j] = -1;
    p.add(Label(e, lo[j]));
    p.add(Label(f, -hi[j]));
  }
  return p;
}

RationalVector generic_lambda(std::mt19937_64& rng, std::size_t k) {
  static const long primes[] = {7, 11, 13, 17, 19, 23};
  RationalVector out;
  for (std::size_t j = 0; j < k; ++j) out.push_back(q(static_cast<long>(rng() % 5) + 1, primes[(j + rng()) % 6]));
  return out;
}

}  // namespace

TEST_CASE("validation on the line") {
  CHECK(validate(line_split(0)).passed());
  Subdivision gap{1, {LabelledPolyhedron(1, {Label({-1}, 0)}), LabelledPolyhedron(1, {Label({1}, 1)})}};
  const auto report = validate(gap);
  CHECK_FALSE(report.passed());
  bool coverage_failed = false;
  for (const auto& [k, v] : report.lines()) coverage_failed |= k == "coverage" && v.find("FAIL") != std::string::npos;
  CHECK(coverage_failed);

  // Missing the shared point.
  Subdivision no_point{1, {LabelledPolyhedron(1, {Label({-1}, 0)}), LabelledPolyhedron(1, {Label({1}, 0)})}};
  CHECK_FALSE(validate(no_point).passed());

  // Overlapping cells.
  auto overlap = line_split(0);
  overlap.cells.push_back(catalog::interval(-1, 1));
  CHECK_FALSE(validate(overlap).passed());
}

TEST_CASE("admissibility") {
  const auto delta = catalog::interval(0, 2);
  CHECK(is_admissible(line_split(1), delta));
  CHECK_FALSE(is_admissible(line_split(2), delta));
  CHECK(is_admissible(hyperplane_split({1, 0}, {q(1, 3)}), catalog::unit_cube(2)));
  CHECK_FALSE(is_admissible(hyperplane_split({1, 0}, {q(1)}), catalog::unit_cube(2)));
  // A diagonal cut through two opposite vertices.
  CHECK_FALSE(is_admissible(hyperplane_split({1, -1}, {q(0)}), catalog::unit_cube(2)));
}

TEST_CASE("Euler identity on the line") {
  const auto s = line_split(0);
  CHECK(euler_sum(s, RationalVector{q(0)}) == 1);
  CHECK(euler_sum(s, RationalVector{q(5)}) == 1);
  CHECK(euler_check(s, 50).passed());
}

TEST_CASE("gluing counts") {
  auto r = glue_count_check(catalog::interval(0, 3), line_split(1));
  CHECK(r.passed());
  CHECK(r.lines().front().second == "4");
  CHECK(glue_count_check(catalog::unit_cube(2), hyperplane_split({1, 0}, {q(1, 2)})).passed());
  CHECK(glue_count_check(catalog::interval(0, 5), hyperplane_split({1}, {q(1), q(3)})).passed());
  CHECK_THROWS_AS(glue_count_check(catalog::interval(0, 2), line_split(2)), Error);

  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; tested < 20 && trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const auto delta = catalog::random_lattice_polytope(rng, dim);
    IntVector normal(dim);
    for (auto& x : normal) x = static_cast<long>(rng() % 5) - 2;
    if (is_zero(std::span<const Integer>(normal))) continue;
    const auto s = hyperplane_split(normal, {q(static_cast<long>(rng() % 5) - 1)});
    if (!is_admissible(s, delta)) continue;
    CHECK(glue_count_check(delta, s).passed());
    ++tested;
  }
  CHECK(tested == 20);
}

TEST_CASE("dual subdivision of A1") {
  const auto a1 = RootSystemData::make(RootType::A1);
  const auto d = dual_subdivision(a1, RationalVector{q(1)});
  REQUIRE(d.subdivision.cells.size() == 3);
  const auto lower = d.find(Wall{}, Wall{});
  const auto point = d.find(Wall{}, Wall{{0}});
  const auto upper = d.find(Wall{{0}}, Wall{{0}});
  REQUIRE((lower && point && upper));
  CHECK(same_set(d.subdivision.cells[*lower], LabelledPolyhedron(1, {Label({-1}, -1)})));
  CHECK(same_set(d.subdivision.cells[*point], catalog::interval(1, 1)));
  CHECK(same_set(d.subdivision.cells[*upper], LabelledPolyhedron(1, {Label({1}, 1)})));
  CHECK(validate(d.subdivision).passed());
  CHECK_THROWS_AS(dual_subdivision(a1, RationalVector{q(0)}), Error);
}

TEST_CASE("dual subdivisions validate with the dimension formula") {
  std::mt19937_64 rng(11);
  for (auto t : {RootType::A2, RootType::B2, RootType::G2, RootType::A3}) {
    const auto r = RootSystemData::make(t);
    const auto lambda = generic_lambda(rng, r.k);
    const auto d = dual_subdivision(r, lambda);
    std::size_t expected = 1;
    for (std::size_t j = 0; j < r.k; ++j) expected *= 3;
    CHECK(d.subdivision.cells.size() == expected);
    for (std::size_t i = 0; i < d.walls.size(); ++i) {
      const auto dim = face_lattice(d.subdivision.cells[i]).faces.front().dim;
      CHECK(r.k - dim == d.walls[i].second.support.size() - d.walls[i].first.support.size());
    }
    // The principal cell is the shifted chamber.
    const Wall top{std::vector<std::size_t>(all_walls(r.k).back().support)};
    LabelledPolyhedron chamber(r.k);
    for (std::size_t j = 0; j < r.k; ++j) {
      IntVector e(r.k);
      e[j] = 1;
      chamber.add(Label(e, lambda[j]));
    }
    CHECK(same_set(d.subdivision.cells[*d.find(top, top)], chamber));
    CHECK(validate(d.subdivision).passed());
    CHECK(euler_check(d.subdivision, 100, 5).passed());
  }
}

TEST_CASE("intersection law for dual cells") {
  std::mt19937_64 rng(2);
  for (auto t : {RootType::A2, RootType::B2}) {
    const auto r = RootSystemData::make(t);
    const auto d = dual_subdivision(r, generic_lambda(rng, r.k));
    auto meet = [](const Wall& a, const Wall& b) {
      Wall w;
      std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                            std::back_inserter(w.support));
      return w;
    };
    auto join = [](const Wall& a, const Wall& b) {
      Wall w;
      std::set_union(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                     std::back_inserter(w.support));
      return w;
    };
    for (std::size_t i = 0; i < d.walls.size(); ++i)
      for (std::size_t j = 0; j < d.walls.size(); ++j) {
        const auto expected = d.find(meet(d.walls[i].first, d.walls[j].first), join(d.walls[i].second, d.walls[j].second));
        REQUIRE(expected);
        CHECK(same_set(intersect(d.subdivision.cells[i], d.subdivision.cells[j]), d.subdivision.cells[*expected]));
      }
  }
}

TEST_CASE("per-wall alternating sums") {
  const auto a2 = RootSystemData::make(RootType::A2);
  const RationalVector lambda{q(1, 7), q(1, 11)};
  const auto d = dual_subdivision(a2, lambda);
  const Wall interior{{0, 1}};
  // Delta inside the open chamber, beyond the small lambda.
  for (const auto& delta : {box({q(1), q(1)}, {q(2), q(3)}), box({q(2), q(1, 2)}, {q(5), q(1)}),
                            convex_hull({{q(1), q(1)}, {q(3), q(1)}, {q(1), q(4)}}, 2)}) {
    for (const auto& tau : all_walls(2)) CHECK(wall_alternating_sum(d, delta, tau) == (tau == interior ? 1 : 0));
    CHECK(is_admissible(d.subdivision, delta));
  }

  // Delta touching the chamber's boundary: the identity fails for every
  // small lambda, since lambda itself lies in Delta.
  const auto a1 = RootSystemData::make(RootType::A1);
  const auto d1 = dual_subdivision(a1, RationalVector{q(1, 2)});
  CHECK(wall_alternating_sum(d1, catalog::interval(0, 3), Wall{{0}}) == 0);
  CHECK(wall_alternating_sum(d1, catalog::interval(0, 3), Wall{}) == 1);
  CHECK(wall_alternating_sum(d1, catalog::interval(1, 3), Wall{{0}}) == 1);
  CHECK(wall_alternating_sum(d1, catalog::interval(1, 3), Wall{}) == 0);
}

TEST_CASE("gluing over the dual subdivision of A3") {
  const auto a3 = RootSystemData::make(RootType::A3);
  const auto d = dual_subdivision(a3, RationalVector{q(1, 3), q(2, 7), q(3, 5)});
  const auto pyramid = catalog::egyptian_pyramid();
  REQUIRE(is_admissible(d.subdivision, pyramid));
  CHECK(glue_count_check(pyramid, d.subdivision).passed());
}

TEST_CASE("subdivision files") {
  const auto a2 = RootSystemData::make(RootType::A2);
  const auto d = dual_subdivision(a2, RationalVector{q(1, 3), q(1, 5)});
  std::stringstream buffer;
  write_subdivision(buffer, d.subdivision);
  const auto back = read_subdivision(buffer, "cells");
  CHECK(back.dim == 2);
  CHECK(back.cells == d.subdivision.cells);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_subdivision(empty), ParseError);
}
