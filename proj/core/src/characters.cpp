#include "delzant/characters.hpp"

#include "delzant/catalog.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace delzant {

std::string GCharacter::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

namespace {

Weight plus_rho(const RootSystemData& r, const Weight& mu) {
  Weight out = mu;
  for (std::size_t j = 0; j < r.k; ++j) out.at(j) += r.rho[j];
  return out;
}

LaurentCharacter alternant(const RootSystemData& r, const Weight& exponent) {
  LaurentCharacter a(r.k);
  for (std::size_t w = 0; w < r.weyl.size(); ++w) a.add(r.apply(w, exponent), r.weyl[w].length % 2 ? -1 : 1);
  return a;
}

}  // namespace

Integer weyl_dimension(const RootSystemData& r, const Weight& mu) {
  const Weight shifted = plus_rho(r, mu);
  Rational d = 1;
  for (std::size_t a = 0; a < r.positive_roots.size(); ++a)
    d *= make_rational(r.pairing(shifted, a), r.pairing(r.rho, a));
  if (d.get_den() != 1) throw Error("Weyl dimension is not an integer");
  return d.get_num();
}

TCharacter weyl_character(const RootSystemData& r, const Weight& mu) {
  if (mu.size() != r.k) throw Error("weight dimension mismatch");
  if (!r.is_dominant(mu)) throw Error("weight " + format_weight(mu) + " is not dominant");
  LaurentCharacter remainder = alternant(r, plus_rho(r, mu));
  const Exponent floor = remainder.terms().begin()->first;
  const LaurentCharacter denominator = alternant(r, r.rho);
  const auto& [lead_exp, lead_coeff] = *denominator.terms().rbegin();

  // Division in the lexicographic order on exponents.
  TCharacter quotient(r.k);
  for (std::size_t steps = 0; !remainder.empty(); ++steps) {
    if (steps > 1000000) throw Error("alternant division did not terminate");
    const auto& [e, c] = *remainder.terms().rbegin();
    if (c % lead_coeff != 0) throw Error("alternant division left a fractional coefficient");
    Exponent q(r.k);
    for (std::size_t j = 0; j < r.k; ++j) q[j] = e[j] - lead_exp[j];
    const Integer qc = c / lead_coeff;
    quotient.add(q, qc);
    remainder -= LaurentCharacter::monomial(q, qc) * denominator;
    // Every term of an exact quotient times the denominator stays above the
    // numerator's lowest exponent.
    if (!remainder.empty() && remainder.terms().rbegin()->first < floor)
      throw Error("alternant division has a remainder");
  }
  if (quotient.total() != weyl_dimension(r, mu)) throw Error("character dimension disagrees with the Weyl formula");
  return quotient;
}

GCharacter decompose(const RootSystemData& r, const TCharacter& chi) {
  GCharacter out(r.k);
  for (const auto& [mu, c] : chi.terms())
    if (auto ind = induce(r, mu)) out.add(ind->weight, c * ind->sign);
  return out;
}

TCharacter expand(const RootSystemData& r, const GCharacter& g) {
  TCharacter out(r.k);
  for (const auto& [lambda, c] : g.terms.terms()) out += weyl_character(r, lambda).scaled(c);
  return out;
}

TCharacter multiply(const TCharacter& a, const TCharacter& b) { return a * b; }

GCharacter multiply_G(const RootSystemData& r, const GCharacter& a, const GCharacter& b) {
  return decompose(r, expand(r, a) * expand(r, b));
}

LabelledPolyhedron weight_polytope(const std::vector<FixedPointDatum>& data) {
  if (data.empty()) throw Error("no fixed point data");
  std::vector<RationalVector> points;
  for (const auto& d : data) points.push_back(d.sigma);
  return convex_hull(points, points.front().size());
}

LabelledPolyhedron weight_polytope(const TCharacter& chi) {
  if (chi.empty()) throw Error("empty character");
  std::vector<RationalVector> points;
  for (const auto& [e, c] : chi.terms()) points.emplace_back(e.begin(), e.end());
  return convex_hull(points, chi.rank());
}

Integer vertex_multiplicity(const std::vector<FixedPointDatum>& data, std::span<const Rational> mu,
                            std::span<const Integer> xi) {
  const auto hull = weight_polytope(data);
  if (mu.size() != hull.dim() || xi.size() != hull.dim()) throw Error("dimension mismatch");
  const auto lattice = face_lattice(hull);
  if (!hull.contains(mu) || lattice.faces[lattice.locate(hull, mu)].dim != 0)
    throw Error("mu is not a vertex of the weight polytope");

  Integer n = 0;
  for (const auto& f : data) {
    bool in_cone = true;
    for (const auto& alpha : f.normal_weights) {
      if (is_zero(std::span<const Rational>(alpha))) throw Error("zero normal weight");
      const Rational s = dot(xi, alpha);
      if (s == 0) throw Error("non-generic direction: orthogonal to a normal weight");
      if (s > 0) in_cone = false;
    }
    const bool at_mu = std::equal(f.sigma.begin(), f.sigma.end(), mu.begin(), mu.end());
    if (!at_mu) {
      RationalVector diff(mu.begin(), mu.end());
      for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= f.sigma[j];
      if (dot(xi, diff) >= 0) throw Error("non-generic direction: mu is not the unique minimum of xi");
      continue;
    }
    if (in_cone) n += f.rr;
  }
  return n;
}

std::vector<FixedPointDatum> toric_fixed_point_data(const LabelledPolyhedron& p, ToricBundle bundle, long m) {
  const auto lattice = face_lattice(p);
  if (lattice.empty()) throw Error("empty polyhedron");
  if (!lattice.vrep.bounded()) throw Error("unbounded polyhedron");
  const std::size_t d = lattice.faces.front().dim;
  std::vector<FixedPointDatum> out;
  for (auto f : lattice.vertex_faces()) {
    const auto edges = edge_directions(lattice, f);
    if (edges.size() != d) throw Error("polytope is not simple");
    FixedPointDatum datum;
    const auto& v = lattice.vrep.vertices[lattice.faces[f].vertices.at(0)];
    datum.sigma = RationalVector(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (bundle == ToricBundle::moment) datum.sigma[j] = v[j] * m;
      if (bundle == ToricBundle::dual) datum.sigma[j] = -v[j] * m;
    }
    for (const auto& e : edges) {
      RationalVector alpha = to_rational(e);
      for (auto& x : alpha) x = -x;
      datum.normal_weights.push_back(std::move(alpha));
    }
    out.push_back(std::move(datum));
  }
  return out;
}

Report verify_decomposition_toric(const LabelledPolyhedron& p, long m) {
  Report report;
  const auto rr = toric_rr(p, m);
  const auto q = p.dilate(m);
  bool unit = true, inside = true;
  for (const auto& [e, c] : rr.terms()) {
    unit = unit && c == 1;
    inside = inside && q.contains(RationalVector(e.begin(), e.end()));
  }
  report.add("weights", std::to_string(rr.size()));
  report.check(unit, "multiplicities", unit ? "all 1" : "not multiplicity-free");
  report.check(inside, "support in mP", inside ? "yes" : "no");
  report.check(Integer(static_cast<long>(rr.size())) == count_points(p, m), "count", count_points(p, m).get_str());
  const Exponent zero(p.dim(), 0);
  const Integer expected = q.contains(RationalVector(p.dim())) ? 1 : 0;
  report.check(rr.coefficient(zero) == expected, "multiplicity of 0", rr.coefficient(zero).get_str());
  return report;
}

Report verify_dual_toric(const LabelledPolyhedron& p, long m) {
  Report report;
  const auto lattice = face_lattice(p);
  if (lattice.empty()) throw Error("empty polyhedron");
  const std::size_t d = lattice.faces.front().dim;
  const Integer sign = d % 2 == 0 ? 1 : -1;
  const auto rr = toric_rr(p, -m);
  const auto q = p.dilate(m);
  const auto ql = face_lattice(q);
  bool signs = true, interior = true;
  for (const auto& [e, c] : rr.terms()) {
    signs = signs && c == sign;
    RationalVector x(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) x[j] = -e[j];
    interior = interior && q.contains(x) && ql.locate(q, x) == 0;
  }
  report.add("dim", std::to_string(d));
  report.add("weights", std::to_string(rr.size()));
  report.add("total", rr.total().get_str());
  report.check(signs, "coefficients", "(-1)^" + std::to_string(d));
  report.check(interior, "support in -int(mP)", interior ? "yes" : "no");
  const Integer n = count_points(p, m, Region::interior);
  report.check(Integer(static_cast<long>(rr.size())) == n, "interior points", n.get_str());
  return report;
}

Report verify_product_orbits(std::int64_t lambda, std::int64_t nu, GCharacter* product) {
  if (lambda < 0 || nu < 0) throw Error("weights must be dominant");
  const auto a1 = RootSystemData::make(RootType::A1);
  GCharacter a(1), b(1);
  a.add({lambda}, 1);
  b.add({nu}, 1);
  const GCharacter g = multiply_G(a1, a, b);
  if (product) *product = g;

  const std::int64_t lo = std::abs(lambda - nu), hi = lambda + nu;
  bool free = true, inside = true;
  for (const auto& [w, c] : g.terms.terms()) {
    free = free && (c == 0 || c == 1);
    inside = inside && w[0] >= lo && w[0] <= hi;
  }
  GCharacter expected(1);
  for (std::int64_t w = hi; w >= lo; w -= 2) expected.add({w}, 1);

  Report report;
  report.add("lambda", std::to_string(lambda));
  report.add("nu", std::to_string(nu));
  std::string terms;
  for (const auto& [w, c] : g.terms.terms()) terms += (terms.empty() ? "" : " ") + std::to_string(w[0]);
  report.add("support", terms);
  report.check(free, "multiplicities", free ? "0 or 1" : "larger than 1");
  report.check(inside, "support in moment interval", "[" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  report.check(g == expected, "support equals interval with parity");
  return report;
}

Report quantum_dh_check(const LabelledPolyhedron& p, std::span<const Rational> mu, long m_max, QuasiPolynomial* fitted) {
  if (mu.size() != p.dim()) throw Error("point dimension mismatch");
  if (!p.contains(mu)) throw Error("point does not lie in the polytope");
  const auto lattice = face_lattice(p);
  const std::size_t d = lattice.faces.front().dim;
  const Integer l = lattice_index(p);
  const auto q = ehrhart_fit(p, m_max);
  if (fitted) *fitted = q;

  Report report;
  report.add("ehrhart", q.to_string());
  report.check(q.degree <= d, "degree", std::to_string(q.degree) + " <= " + std::to_string(d));
  report.check(l % q.period == 0, "period", std::to_string(q.period) + " divides " + l.get_str());
  bool reproduces = true;
  for (long m = 0; m <= m_max; ++m) reproduces = reproduces && q(m) == count_points(p, m);
  report.check(reproduces, "counts reproduced", "m <= " + std::to_string(m_max));

  // Diagonal multiplicity N^(m)(m mu), read off the character.
  const Integer mu_index = lcm_of_denominators(mu);
  std::vector<Integer> diagonal;
  for (long m = 0; m <= m_max; ++m) {
    Exponent e(mu.size());
    bool integral = true;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      const Rational x = mu[j] * m;
      if (x.get_den() != 1) integral = false;
      else e[j] = x.get_num().get_si();
    }
    diagonal.push_back(integral ? toric_rr(p, m).coefficient(e) : Integer(0));
  }
  std::vector<std::size_t> periods;
  for (long c = 1; c <= mu_index.get_si(); ++c)
    if (mu_index.get_si() % c == 0) periods.push_back(static_cast<std::size_t>(c));
  try {
    const auto diag = fit_quasi_polynomial(diagonal, 0, periods);
    report.check(mu_index % diag.period == 0, "diagonal period", std::to_string(diag.period));
  } catch (const Error&) {
    report.check(false, "diagonal period", "no fit");
  }
  return report;
}

Report verify_vergne() {
  Report report;
  const auto a1 = RootSystemData::make(RootType::A1);

  // Toric: CP^1 with O(2) has polytope [0,2]; RR(L^-1) is the dual count.
  const auto segment = LabelledPolyhedron(1, {Label({1}, 0), Label({-1}, -2)});
  const auto toric = toric_rr(segment, -1);
  std::string toric_terms;
  for (const auto& [e, c] : toric.terms())
    toric_terms += (toric_terms.empty() ? "" : " + ") + c.get_str() + " z^" + std::to_string(e[0]);
  report.add("toric character", toric_terms);
  report.check(toric.total() == -1, "toric total", toric.total().get_str());

  // As an SU(2) space the sections of O(-2) are Ind zeta_{-2} = -chi_0.
  GCharacter bwb(1);
  if (auto ind = induce(a1, {-2})) bwb.add(ind->weight, ind->sign);

  // Dual formula: Delta = {2 rho}, dim 0, sum over mu in relint Delta of
  // Ind zeta_{-mu}; M_mu is a point.
  const auto delta = LabelledPolyhedron(1, {Label({1}, 2), Label({-1}, -2)});
  const auto dl = face_lattice(delta);
  const std::size_t dim_delta = dl.faces.front().dim;
  GCharacter dual(1);
  for_each_lattice_point(delta, 1, Region::interior, [&](const IntVector& mu) {
    if (auto ind = induce(a1, {-mu[0].get_si()}))
      dual.add(ind->weight, Integer(dim_delta % 2 == 0 ? 1 : -1) * ind->sign);
  });

  GCharacter expected(1);
  expected.add({0}, -1);
  report.check(dual == expected, "dual formula", dual.terms.empty() ? "0" : "-chi 0");
  report.check(bwb == expected, "Borel-Weil-Bott", "-chi 0");
  report.check(toric.total() == dual.terms.coefficient({0}), "invariant part agrees", toric.total().get_str());
  report.check(dual_support_bound(a1, delta, {0}), "support bound at 0");
  report.add("conclusion", "RR(M,L^-1)^G = -1, RR(M,L^-1) = -chi 0");
  return report;
}

Report verify_genus(const LabelledPolyhedron& p, std::span<const Integer> xi, long m) {
  const auto loc = localized_vertex_multiplicity(p, m, xi);
  Report report;
  report.add("minimizer", format_vector(loc.minimizer));
  report.check(loc.count == 1, "localized vertices", std::to_string(loc.count));
  if (loc.counted) report.check(*loc.counted == loc.minimizer, "counted vertex", format_vector(*loc.counted));
  return report;
}

Report verify_genus(std::uint64_t seed, std::size_t pairs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  Report report;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t dim = 1 + i % 3;
    const auto p = catalog::random_lattice_polytope(rng, dim);
    for (;;) {
      IntVector xi(dim);
      for (auto& x : xi) x = coord(rng);
      Report one;
      try {
        one = verify_genus(p, xi);
      } catch (const Error&) {
        continue;  // xi orthogonal to an edge
      }
      if (!one.passed()) {
        ++failures;
        report.merge(one, "pair " + std::to_string(i) + " ");
      }
      break;
    }
  }
  report.check(failures == 0, "pairs", std::to_string(pairs - failures) + "/" + std::to_string(pairs));
  return report;
}

}  // namespace delzant
