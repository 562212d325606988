// Virtual characters of the torus and of the group, and the multiplicity
// checks built on them: weight polytopes, vertex multiplicities from fixed
// point data, the toric decomposition and dual statements, products of
// SU(2) orbits, and the quasi-polynomial behaviour of multiplicities.
#pragma once

#include "delzant/lattice_counting.hpp"
#include "delzant/report.hpp"
#include "delzant/root_system.hpp"

namespace delzant {

using TCharacter = LaurentCharacter;

/// Integer combination of irreducible characters chi_lambda, keyed by the
/// dominant highest weight lambda.
struct GCharacter {
  LaurentCharacter terms;

  explicit GCharacter(std::size_t rank = 0) : terms(rank) {}
  void add(const Weight& lambda, const Integer& c) { terms.add(lambda, c); }
  friend bool operator==(const GCharacter&, const GCharacter&) = default;
  /// One term per line: "<coeff>\tchi <l1> <l2> ...".
  void write(std::ostream& out) const { terms.write(out, "chi "); }
  std::string to_string() const;
};

/// chi_mu by exact division of alternants; the result is checked against the
/// Weyl dimension formula.
TCharacter weyl_character(const RootSystemData& r, const Weight& mu);

/// prod over positive roots of <mu + rho, coroot> / <rho, coroot>.
Integer weyl_dimension(const RootSystemData& r, const Weight& mu);

/// Termwise induction.
GCharacter decompose(const RootSystemData& r, const TCharacter& chi);

/// Sum of c_lambda chi_lambda as a torus character.
TCharacter expand(const RootSystemData& r, const GCharacter& g);

TCharacter multiply(const TCharacter& a, const TCharacter& b);
GCharacter multiply_G(const RootSystemData& r, const GCharacter& a, const GCharacter& b);

struct FixedPointDatum {
  RationalVector sigma;                      // orbiweight of the bundle at F
  std::vector<RationalVector> normal_weights;  // weights of the normal representation
  Integer rr = 1;                            // index of the fixed component
};

/// Convex hull of the points (the sigma_F, or the support of a character).
LabelledPolyhedron weight_polytope(const std::vector<FixedPointDatum>& data);
LabelledPolyhedron weight_polytope(const TCharacter& chi);

/// Sum of RR(F) over fixed components with sigma_F = mu and xi in the cone
/// {<alpha_jF, xi> <= 0}. Requires mu to be a vertex of the weight polytope,
/// <mu - sigma_F, xi> < 0 whenever sigma_F != mu, and xi not orthogonal to any
/// normal weight.
Integer vertex_multiplicity(const std::vector<FixedPointDatum>& data, std::span<const Rational> mu,
                            std::span<const Integer> xi);

enum class ToricBundle { moment, rigid, dual };

/// Fixed point data of the toric orbifold of a simple polytope P, with the
/// bundle of the dilate mP (moment), the trivial bundle (rigid) or the
/// inverse of the moment bundle (dual). Normal weights are the negated edge
/// directions.
std::vector<FixedPointDatum> toric_fixed_point_data(const LabelledPolyhedron& p, ToricBundle bundle, long m = 1);

/// Every lattice point of mP appears with multiplicity one and nothing else.
Report verify_decomposition_toric(const LabelledPolyhedron& p, long m);

/// toric_rr(P, -m) is supported on minus the interior lattice points of mP,
/// with sign (-1)^{dim P}.
Report verify_dual_toric(const LabelledPolyhedron& p, long m);

/// chi_lambda chi_nu for SU(2): multiplicity-free, supported on
/// lambda + nu, lambda + nu - 2, ..., |lambda - nu|.
Report verify_product_orbits(std::int64_t lambda, std::int64_t nu, GCharacter* product = nullptr);

/// Fits m -> #(mP) and checks degree <= dim P and period | l; also fits the
/// diagonal m -> [m mu is a lattice point].
Report quantum_dh_check(const LabelledPolyhedron& p, std::span<const Rational> mu, long m_max,
                        QuasiPolynomial* fitted = nullptr);

/// The SU(2) example with M = CP^1, L = O(2): RR(M, L^-1) computed by the
/// toric dual count on [0,2] and by the dual multiplicity formula on
/// Delta = {2 rho}; both must give -chi_0.
Report verify_vergne();

/// The rigid bundle's invariant part: exactly one vertex of mP localizes for
/// a generic xi.
Report verify_genus(const LabelledPolyhedron& p, std::span<const Integer> xi, long m = 1);

/// verify_genus over `pairs` seeded (random lattice polytope, generic xi)
/// pairs in dims 1-3.
Report verify_genus(std::uint64_t seed, std::size_t pairs);

}  // namespace delzant
