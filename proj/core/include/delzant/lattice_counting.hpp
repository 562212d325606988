// Lattice points in dilates of labelled polytopes: counting, the toric
// Riemann-Roch character, Ehrhart quasi-polynomials and reciprocity, and
// vertex localization (Brion's identity).
#pragma once

#include "delzant/polyhedron.hpp"
#include "delzant/report.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace delzant {

using Exponent = std::vector<std::int64_t>;

/// Finite Laurent sum of monomials z^e with integer coefficients. Zero
/// coefficients are never stored; terms iterate in lexicographic order.
class LaurentCharacter {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentCharacter() = default;
  explicit LaurentCharacter(std::size_t rank) : rank_(rank) {}

  static LaurentCharacter monomial(const Exponent& e, const Integer& c = 1);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Integer coefficient(const Exponent& e) const;
  Integer total() const;  // sum of coefficients

  void add(const Exponent& e, const Integer& c);
  LaurentCharacter& operator+=(const LaurentCharacter& o);
  LaurentCharacter& operator-=(const LaurentCharacter& o);
  LaurentCharacter scaled(const Integer& c) const;

  /// Multiplies exponents by -1.
  LaurentCharacter dual() const;

  /// Product of Laurent sums (convolution of the exponent maps).
  friend LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b);
  friend LaurentCharacter operator+(LaurentCharacter a, const LaurentCharacter& b) { return a += b; }
  friend LaurentCharacter operator-(LaurentCharacter a, const LaurentCharacter& b) { return a -= b; }
  friend bool operator==(const LaurentCharacter& a, const LaurentCharacter& b) { return a.terms_ == b.terms_; }

  Rational evaluate(std::span<const Rational> z) const;

  /// One term per line: "<coeff>\t<prefix><e1> <e2> ... <ek>".
  void write(std::ostream& out, const std::string& prefix = {}) const;

 private:
  std::size_t rank_ = 0;
  Terms terms_;
};

/// z^e for nonzero rational z.
Rational monomial_value(std::span<const Rational> z, std::span<const Integer> e);

enum class Region { closed, interior };

/// Calls `visit` for every lattice point of mP (closed) or of its relative
/// interior. Throws "unbounded polyhedron" if P is unbounded.
void for_each_lattice_point(const LabelledPolyhedron& p, long m, Region region,
                            const std::function<void(const IntVector&)>& visit);

Integer count_points(const LabelledPolyhedron& p, long m, Region region = Region::closed);

/// Sum of z^mu over the lattice points of mP for m >= 0; for m < 0,
/// (-1)^{dim P} times the sum of z^{-mu} over the interior of |m|P.
LaurentCharacter toric_rr(const LabelledPolyhedron& p, long m);

struct QuasiPolynomial {
  std::size_t degree = 0;
  std::size_t period = 1;
  std::vector<RationalVector> coeffs;  // per residue class, constant term first

  Rational operator()(long m) const;
  std::string to_string() const;
};

/// Exact fit of samples[m], m = 0, 1, ..., trying the periods in order; each
/// residue class needs degree + 1 samples. Throws "fit failure".
QuasiPolynomial fit_quasi_polynomial(const std::vector<Integer>& samples, std::size_t degree,
                                     const std::vector<std::size_t>& periods);

/// lcm of the denominators of the vertex coordinates: the least l with lP a
/// lattice polytope.
Integer lattice_index(const LabelledPolyhedron& p);

/// Fits m -> #(lattice points of mP) on 0..m_max. Period candidates are the
/// divisors of lattice_index(p) in increasing order; each residue class is
/// interpolated exactly and checked against every sample.
QuasiPolynomial ehrhart_fit(const LabelledPolyhedron& p, long m_max);

/// Compares the fitted p(-m) with (-1)^{dim P} #(interior of mP), 1 <= m <= m_max.
Report reciprocity_check(const LabelledPolyhedron& p, long m_max);

/// Brion's identity: sum over vertices v of the cone generating function
/// z^v sum_{parallelepiped} z^p / prod (1 - z^e). Requires a bounded polytope
/// with lattice vertices and exactly dim P edges at every vertex.
Rational brion_evaluate(const LabelledPolyhedron& p, std::span<const Rational> z);

struct VertexLocalization {
  RationalVector minimizer;  // the vertex minimizing <., xi>
  std::size_t count = 0;     // vertices whose edge directions all pair positively with xi
  std::optional<RationalVector> counted;  // that vertex when count == 1
};

/// Localizes at vertices of mP: the normal weights at a vertex are the
/// negated edge directions, and a vertex contributes when every normal weight
/// pairs negatively with xi. Throws if xi is orthogonal to an edge. Simplicity
/// is not needed for the count, so non-simple vertices are accepted.
VertexLocalization localized_vertex_multiplicity(const LabelledPolyhedron& p, long m, std::span<const Integer> xi);

}  // namespace delzant
