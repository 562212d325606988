// Root systems of types A1, A2, A3, B2, G2 in fundamental-weight
// coordinates: the Weyl group, the rho-shifted action, induction from the
// torus, walls of the positive chamber and the reflection conditions for -lambda.
#pragma once

#include "delzant/lattice_counting.hpp"
#include "delzant/polyhedron.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace delzant {

using Weight = Exponent;  // fundamental-weight coordinates

enum class RootType { A1, A2, A3, B2, G2 };

RootType parse_root_type(const std::string& name);
std::string to_string(RootType t);

struct WeylElement {
  std::vector<std::int64_t> matrix;  // k x k, row-major, acting on weight coordinates
  std::size_t length = 0;
  std::vector<std::size_t> word;  // a reduced word in the simple reflections, applied right to left
};

struct RootSystemData {
  RootType type;
  std::size_t k = 0;
  IntegerMatrix cartan;  // row i is the simple root alpha_i in weight coordinates
  std::vector<Weight> simple_roots;
  std::vector<Weight> fundamental_weights;
  std::vector<Weight> positive_roots;  // weight coordinates
  // Coroot functionals: <mu, coroot of positive_roots[j]> = dot(coroots[j], mu).
  // Their entries are the coefficients of the coroot in the simple coroots.
  std::vector<Weight> coroots;
  std::vector<WeylElement> weyl;  // weyl[0] is the identity
  std::size_t w0 = 0;
  Weight rho;

  static RootSystemData make(RootType type);

  Weight apply(std::size_t w, const Weight& mu) const;
  RationalVector apply(std::size_t w, const RationalVector& mu) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;  // index of w_a w_b
  std::size_t inverse(std::size_t a) const;
  std::size_t index_of(const std::vector<std::int64_t>& matrix) const;

  std::int64_t pairing(const Weight& mu, std::size_t root) const;
  bool is_dominant(const Weight& mu) const;
  bool is_regular(const Weight& mu) const;  // no coroot vanishes
};

/// w(mu + rho) - rho.
Weight affine_action(const RootSystemData& r, std::size_t w, const Weight& mu);

struct Induced {
  int sign = 1;
  Weight weight;  // dominant
  std::size_t w = 0;
};

/// Zero (nullopt) if mu + rho is singular; otherwise the unique w with w.mu
/// dominant, returned as (-1)^{l(w)} chi_{w.mu}.
std::optional<Induced> induce(const RootSystemData& r, const Weight& mu);

/// mu* = -w0 mu.
Weight star(const RootSystemData& r, const Weight& mu);
RationalVector star(const RootSystemData& r, const RationalVector& mu);

/// An open wall of the positive chamber: coordinates in `support` are
/// positive, all others vanish. The interior has full support; {0} has none.
struct Wall {
  std::vector<std::size_t> support;
  friend bool operator==(const Wall&, const Wall&) = default;
};

Wall wall_of(const RootSystemData& r, const Weight& dominant);
std::string format_wall(const RootSystemData& r, const Wall& s);

struct WallData {
  RationalVector rho_sigma;  // half the sum of the positive roots vanishing on the wall
  std::size_t w_sigma = 0;   // longest element of the wall's Weyl group
  std::vector<std::size_t> roots;  // indices into positive_roots
};

WallData wall_data(const RootSystemData& r, const Wall& s);

/// The four equivalent conditions for a dominant lambda with wall sigma:
/// (1) some w.(-lambda) is dominant, (2) lambda - rho is regular,
/// (3) w_sigma(lambda - rho) is dominant regular, (4) lambda - 2(rho - rho_sigma)
/// is dominant. Each is evaluated independently.
struct ReflectConditions {
  bool reflects = false;
  bool regular = false;
  bool dominant_regular = false;
  bool dominant = false;
  std::optional<std::size_t> witness;  // the w of condition (1)
};

ReflectConditions reflect_conditions(const RootSystemData& r, const Weight& lambda);

struct Reflection {
  std::size_t w = 0;
  Weight result;  // w.(-lambda)
};

/// None iff lambda - rho is singular. Otherwise w = w0 w_sigma and
/// w.(-lambda) = lambda* - 2(rho - rho_sigma*); both identities are checked
/// and a violation throws.
std::optional<Reflection> reflect(const RootSystemData& r, const Weight& lambda);

/// Smallest wall whose closure contains every point: the union of supports.
Wall principal_wall(const RootSystemData& r, const std::vector<RationalVector>& points);

/// Whether nu lies in *(relint Delta - 2(rho - rho_sigma)), sigma the
/// principal wall of Delta.
bool dual_support_bound(const RootSystemData& r, const LabelledPolyhedron& delta, const Weight& nu);

Weight parse_weight(const std::string& csv);
RationalVector parse_rational_csv(const std::string& csv);
std::string format_weight(const Weight& mu);

}  // namespace delzant
