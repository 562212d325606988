#include "delzant/lattice_counting.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace delzant {

// ---------------------------------------------------------------------------
// LaurentCharacter

LaurentCharacter LaurentCharacter::monomial(const Exponent& e, const Integer& c) {
  LaurentCharacter out(e.size());
  out.add(e, c);
  return out;
}

Integer LaurentCharacter::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentCharacter::total() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentCharacter::add(const Exponent& e, const Integer& c) {
  if (rank_ == 0) rank_ = e.size();
  if (e.size() != rank_) throw Error("exponent rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentCharacter LaurentCharacter::scaled(const Integer& c) const {
  LaurentCharacter out(rank_);
  for (const auto& [e, x] : terms_) out.add(e, x * c);
  return out;
}

LaurentCharacter LaurentCharacter::dual() const {
  LaurentCharacter out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent neg = e;
    for (auto& x : neg) x = -x;
    out.add(neg, c);
  }
  return out;
}

LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b) {
  LaurentCharacter out(std::max(a.rank_, b.rank_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) throw Error("exponent rank mismatch");
      Exponent e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add(e, ca * cb);
    }
  return out;
}

namespace {

Rational power(const Rational& q, long n) {
  if (q == 0) throw Error("zero base in a Laurent monomial");
  Integer num, den;
  const unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  return n >= 0 ? make_rational(num, den) : make_rational(den, num);
}

}  // namespace

Rational LaurentCharacter::evaluate(std::span<const Rational> z) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    if (e.size() != z.size()) throw Error("evaluation point has the wrong dimension");
    Rational t = c;
    for (std::size_t j = 0; j < e.size(); ++j) t *= power(z[j], e[j]);
    s += t;
  }
  return s;
}

void LaurentCharacter::write(std::ostream& out, const std::string& prefix) const {
  for (const auto& [e, c] : terms_) {
    out << c.get_str() << '\t' << prefix;
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
}

Rational monomial_value(std::span<const Rational> z, std::span<const Integer> e) {
  if (z.size() != e.size()) throw Error("evaluation point has the wrong dimension");
  Rational t = 1;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (!e[j].fits_slong_p()) throw Error("exponent out of range");
    t *= power(z[j], e[j].get_si());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Exponent to_exponent(const IntVector& v, bool negate = false) {
  Exponent e(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].fits_slong_p()) throw Error("exponent out of range");
    e[j] = negate ? -v[j].get_si() : v[j].get_si();
  }
  return e;
}

}  // namespace

void for_each_lattice_point(const LabelledPolyhedron& p, long m, Region region,
                            const std::function<void(const IntVector&)>& visit) {
  if (m < 0) throw Error("dilation factor must be nonnegative");
  const LabelledPolyhedron q = p.dilate(m);
  const auto vrep = vertex_representation(q);
  if (vrep.empty()) return;
  if (!vrep.bounded()) throw Error("unbounded polyhedron");
  const std::size_t k = q.dim();
  if (k == 0) {
    visit({});
    return;
  }

  // Implicit equalities: labels tight at every vertex.
  std::vector<bool> equality(q.size(), false);
  for (std::size_t i = 0; i < q.size(); ++i)
    equality[i] = std::all_of(vrep.vertices.begin(), vrep.vertices.end(), [&](const RationalVector& v) {
      return dot(q.label(i).normal, v) == q.label(i).offset;
    });

  IntVector lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational mn = vrep.vertices[0][j], mx = vrep.vertices[0][j];
    for (const auto& v : vrep.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_of(mn);
    hi[j] = floor_of(mx);
  }

  enum class Kind { at_least, equal, greater };
  auto kind_of = [&](std::size_t i) {
    if (region == Region::closed) return Kind::at_least;
    return equality[i] ? Kind::equal : Kind::greater;
  };

  IntVector x(k);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j + 1 < k) {
      for (x[j] = lo[j]; x[j] <= hi[j]; ++x[j]) rec(j + 1);
      return;
    }
    // Exact admissible range of the last coordinate.
    Integer first = lo[k - 1], last = hi[k - 1];
    for (std::size_t i = 0; i < q.size() && first <= last; ++i) {
      const auto& l = q.label(i);
      Rational s = 0;
      for (std::size_t c = 0; c + 1 < k; ++c) s += l.normal[c] * x[c];
      const Rational rhs = l.offset - s;  // need normal[k-1] * t (>=, =, >) rhs
      const Integer& c = l.normal[k - 1];
      const Kind kind = kind_of(i);
      if (c == 0) {
        const bool ok = kind == Kind::at_least ? 0 >= rhs : kind == Kind::equal ? rhs == 0 : 0 > rhs;
        if (!ok) last = first - 1;
        continue;
      }
      const Rational bound = rhs / c;
      if (kind == Kind::equal) {
        if (bound.get_den() != 1) {
          last = first - 1;
          continue;
        }
        first = std::max(first, bound.get_num());
        last = std::min(last, bound.get_num());
        continue;
      }
      const bool strict = kind == Kind::greater;
      if (c > 0) {
        Integer b = strict ? floor_of(bound) + 1 : ceil_of(bound);
        first = std::max(first, b);
      } else {
        Integer b = strict ? ceil_of(bound) - 1 : floor_of(bound);
        last = std::min(last, b);
      }
    }
    for (x[k - 1] = first; x[k - 1] <= last; ++x[k - 1]) visit(x);
  };
  rec(0);
}

Integer count_points(const LabelledPolyhedron& p, long m, Region region) {
  Integer n = 0;
  for_each_lattice_point(p, m, region, [&](const IntVector&) { ++n; });
  return n;
}

namespace {

std::size_t polytope_dimension(const LabelledPolyhedron& p) {
  const auto lattice = face_lattice(p);
  return lattice.empty() ? 0 : lattice.faces.front().dim;
}

}  // namespace

LaurentCharacter toric_rr(const LabelledPolyhedron& p, long m) {
  LaurentCharacter out(p.dim());
  if (m >= 0) {
    for_each_lattice_point(p, m, Region::closed, [&](const IntVector& x) { out.add(to_exponent(x), 1); });
    return out;
  }
  const Integer sign = polytope_dimension(p) % 2 == 0 ? 1 : -1;
  for_each_lattice_point(p, -m, Region::interior, [&](const IntVector& x) { out.add(to_exponent(x, true), sign); });
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-polynomials

Rational QuasiPolynomial::operator()(long m) const {
  const long c = static_cast<long>(period);
  const auto& poly = coeffs.at(static_cast<std::size_t>(((m % c) + c) % c));
  Rational s = 0;
  for (std::size_t i = poly.size(); i-- > 0;) s = s * m + poly[i];
  return s;
}

std::string QuasiPolynomial::to_string() const {
  std::ostringstream out;
  out << "degree " << degree << ", period " << period;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    out << "; residue " << r << ":";
    for (const auto& c : coeffs[r]) out << ' ' << delzant::to_string(c);
  }
  return out.str();
}

Integer lattice_index(const LabelledPolyhedron& p) {
  const auto vrep = vertex_representation(p);
  if (!vrep.bounded()) throw Error("unbounded polyhedron");
  Integer l = 1;
  for (const auto& v : vrep.vertices) {
    const Integer d = lcm_of_denominators(v);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

QuasiPolynomial ehrhart_fit(const LabelledPolyhedron& p, long m_max) {
  const auto lattice = face_lattice(p);
  if (lattice.empty()) throw Error("empty polyhedron");
  if (!lattice.vrep.bounded()) throw Error("unbounded polyhedron");
  const std::size_t d = lattice.faces.front().dim;
  const Integer l = lattice_index(p);
  if (!l.fits_slong_p() || Integer(m_max + 1) < Integer(static_cast<long>(d + 1)) * l)
    throw Error("m_max too small: need m_max + 1 >= (dim + 1) * l with l = " + l.get_str());

  std::vector<Integer> counts(static_cast<std::size_t>(m_max + 1));
  for (long m = 0; m <= m_max; ++m) counts[static_cast<std::size_t>(m)] = count_points(p, m);

  std::vector<std::size_t> periods;
  for (long c = 1; c <= l.get_si(); ++c)
    if (l.get_si() % c == 0) periods.push_back(static_cast<std::size_t>(c));
  return fit_quasi_polynomial(counts, d, periods);
}

QuasiPolynomial fit_quasi_polynomial(const std::vector<Integer>& samples, std::size_t degree,
                                     const std::vector<std::size_t>& periods) {
  for (const std::size_t period : periods) {
    if (period == 0) continue;
    QuasiPolynomial q{degree, period, {}};
    bool enough = true;
    for (std::size_t r = 0; r < period && enough; ++r) {
      std::vector<std::size_t> ms;
      for (std::size_t m = r; m < samples.size(); m += period) ms.push_back(m);
      if (ms.size() < degree + 1) {
        enough = false;
        break;
      }
      RationalMatrix vander(degree + 1, degree + 1);
      RationalVector rhs(degree + 1);
      for (std::size_t i = 0; i <= degree; ++i) {
        Rational power = 1;
        for (std::size_t j = 0; j <= degree; ++j, power *= static_cast<long>(ms[i])) vander(i, j) = power;
        rhs[i] = samples[ms[i]];
      }
      q.coeffs.push_back(solve(vander, rhs));
    }
    if (!enough) continue;
    bool fits = true;
    for (std::size_t m = 0; m < samples.size() && fits; ++m)
      if (q(static_cast<long>(m)) != samples[m]) fits = false;
    if (fits) return q;
  }
  throw Error("fit failure");
}

Report reciprocity_check(const LabelledPolyhedron& p, long m_max) {
  const auto lattice = face_lattice(p);
  if (lattice.empty()) throw Error("empty polyhedron");
  const std::size_t d = lattice.faces.front().dim;
  const Integer l = lattice_index(p);
  const Integer needed_samples = Integer(static_cast<long>(d + 1)) * l;
  const long needed = needed_samples.get_si() - 1;
  const auto q = ehrhart_fit(p, std::max(m_max, needed));
  Report report;
  report.add("dim", std::to_string(d));
  report.add("period", std::to_string(q.period));
  for (long m = 1; m <= m_max; ++m) {
    const Rational lhs = q(-m);
    Integer rhs = count_points(p, m, Region::interior);
    if (d % 2 == 1) rhs = -rhs;
    report.check(lhs == rhs, "m=" + std::to_string(m), "p(-m) = " + to_string(lhs) + ", signed interior = " + rhs.get_str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Vertex localization

namespace {

struct VertexCone {
  RationalVector vertex;
  std::vector<IntVector> edges;
};

std::vector<VertexCone> vertex_cones(const FaceLattice& lattice, bool require_simple) {
  if (lattice.empty()) throw Error("empty polyhedron");
  if (!lattice.vrep.bounded()) throw Error("unbounded polyhedron");
  const std::size_t d = lattice.faces.front().dim;
  std::vector<VertexCone> out;
  for (auto f : lattice.vertex_faces()) {
    VertexCone c{lattice.vrep.vertices[lattice.faces[f].vertices.at(0)], edge_directions(lattice, f)};
    if (require_simple && c.edges.size() != d) throw Error("polytope is not simple at vertex (" + format_vector(c.vertex) + ")");
    out.push_back(std::move(c));
  }
  return out;
}

// Lattice points y with y = sum t_i e_i, 0 <= t_i < 1.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& edges, std::size_t k) {
  const std::size_t d = edges.size();
  if (d == 0) return {IntVector(k)};
  RationalMatrix e(k, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) e(j, i) = edges[i][j];
  // Rows on which the edge matrix is invertible.
  RationalMatrix et = e.transpose();
  const auto pivots = row_reduce(et);
  RationalMatrix square(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < d; ++i) square(r, i) = e(pivots[r], i);
  const RationalMatrix inv = inverse(square);

  IntVector lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& v : edges) (v[j] < 0 ? lo[j] : hi[j]) += v[j];

  std::vector<IntVector> out;
  IntVector y = lo;
  for (;;) {
    RationalVector sub(d);
    for (std::size_t r = 0; r < d; ++r) sub[r] = y[pivots[r]];
    const RationalVector t = inv.apply(sub);
    bool inside = std::all_of(t.begin(), t.end(), [](const Rational& x) { return x >= 0 && x < 1; });
    if (inside) {
      const RationalVector back = e.apply(t);
      for (std::size_t j = 0; j < k && inside; ++j) inside = back[j] == y[j];
    }
    if (inside) out.push_back(y);
    std::size_t j = 0;
    while (j < k && ++y[j] > hi[j]) y[j] = lo[j], ++j;
    if (j == k) break;
  }
  return out;
}

}  // namespace

Rational brion_evaluate(const LabelledPolyhedron& p, std::span<const Rational> z) {
  if (z.size() != p.dim()) throw Error("evaluation point has the wrong dimension");
  if (std::any_of(z.begin(), z.end(), [](const Rational& x) { return x == 0; }))
    throw Error("evaluation point has a zero coordinate");
  const auto lattice = face_lattice(p);
  Rational total = 0;
  for (const auto& cone : vertex_cones(lattice, true)) {
    IntVector v(p.dim());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (cone.vertex[j].get_den() != 1) throw Error("non-lattice vertex (" + format_vector(cone.vertex) + ")");
      v[j] = cone.vertex[j].get_num();
    }
    Rational denominator = 1;
    for (const auto& e : cone.edges) {
      const Rational ze = monomial_value(z, e);
      if (ze == 1) throw Error("non-generic evaluation point");
      denominator *= 1 - ze;
    }
    Rational numerator = 0;
    for (const auto& y : parallelepiped_points(cone.edges, p.dim())) {
      IntVector x = v;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[j];
      numerator += monomial_value(z, x);
    }
    total += numerator / denominator;
  }
  return total;
}

VertexLocalization localized_vertex_multiplicity(const LabelledPolyhedron& p, long m, std::span<const Integer> xi) {
  if (m < 0) throw Error("bundle power must be nonnegative");
  if (xi.size() != p.dim()) throw Error("direction has the wrong dimension");
  const auto q = p.dilate(m);
  const auto lattice = face_lattice(q);
  const auto cones = vertex_cones(lattice, false);

  VertexLocalization out;
  std::optional<Rational> best;
  for (const auto& cone : cones) {
    bool all_positive = true;
    for (const auto& e : cone.edges) {
      const Integer s = dot(std::span<const Integer>(e), xi);
      if (s == 0) throw Error("non-generic direction: orthogonal to an edge at (" + format_vector(cone.vertex) + ")");
      if (s < 0) all_positive = false;
    }
    const Rational h = dot(xi, cone.vertex);
    if (!best || h < *best) {
      best = h;
      out.minimizer = cone.vertex;
    }
    if (all_positive) {
      ++out.count;
      out.counted = cone.vertex;
    }
  }
  if (out.count != 1) out.counted.reset();
  return out;
}

}  // namespace delzant
