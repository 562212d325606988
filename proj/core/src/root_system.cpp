#include "delzant/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace delzant {

RootType parse_root_type(const std::string& name) {
  if (name == "A1") return RootType::A1;
  if (name == "A2") return RootType::A2;
  if (name == "A3") return RootType::A3;
  if (name == "B2") return RootType::B2;
  if (name == "G2") return RootType::G2;
  throw Error("unsupported root system type '" + name + "' (expected A1, A2, A3, B2 or G2)");
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A2: return "A2";
    case RootType::A3: return "A3";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
  }
  return "?";
}

namespace {

using Mat = std::vector<std::int64_t>;

Mat mat_mul(const Mat& a, const Mat& b, std::size_t k) {
  Mat c(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j) c[i * k + j] += a[i * k + l] * b[l * k + j];
  return c;
}

Mat identity(std::size_t k) {
  Mat m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = 1;
  return m;
}

IntegerMatrix cartan_of(RootType t) {
  switch (t) {
    case RootType::A1: return IntegerMatrix{{2}};
    case RootType::A2: return IntegerMatrix{{2, -1}, {-1, 2}};
    case RootType::A3: return IntegerMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    case RootType::B2: return IntegerMatrix{{2, -2}, {-1, 2}};
    case RootType::G2: return IntegerMatrix{{2, -1}, {-3, 2}};
  }
  throw Error("unsupported root system type");
}

}  // namespace

RootSystemData RootSystemData::make(RootType type) {
  RootSystemData r;
  r.type = type;
  r.cartan = cartan_of(type);
  const std::size_t k = r.k = r.cartan.rows();
  for (std::size_t i = 0; i < k; ++i) {
    Weight a(k), f(k, 0);
    for (std::size_t j = 0; j < k; ++j) a[j] = r.cartan(i, j).get_si();
    f[i] = 1;
    r.simple_roots.push_back(a);
    r.fundamental_weights.push_back(f);
  }
  r.rho = Weight(k, 1);

  std::vector<Mat> reflections;
  for (std::size_t i = 0; i < k; ++i) {
    Mat s = identity(k);
    for (std::size_t row = 0; row < k; ++row) s[row * k + i] -= r.simple_roots[i][row];
    reflections.push_back(s);
  }

  // Breadth-first closure; the BFS depth is the word length.
  std::map<Mat, std::size_t> seen;
  std::deque<std::size_t> queue;
  r.weyl.push_back({identity(k), 0, {}});
  seen[r.weyl[0].matrix] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      Mat m = mat_mul(reflections[i], r.weyl[w].matrix, k);
      if (seen.count(m)) continue;
      WeylElement e{m, r.weyl[w].length + 1, {i}};
      e.word.insert(e.word.end(), r.weyl[w].word.begin(), r.weyl[w].word.end());
      seen[m] = r.weyl.size();
      queue.push_back(r.weyl.size());
      r.weyl.push_back(std::move(e));
    }
    if (r.weyl.size() > 10000) throw Error("Weyl group closure did not terminate");
  }

  // Roots as images of simple roots; positivity read off root coordinates.
  const RationalMatrix to_root_coords = delzant::inverse(to_rational(r.cartan.transpose()));
  std::map<Weight, std::size_t> root_index;
  for (std::size_t w = 0; w < r.weyl.size(); ++w)
    for (std::size_t i = 0; i < k; ++i) {
      Weight beta = r.apply(w, r.simple_roots[i]);
      if (root_index.count(beta)) continue;
      RationalVector b(beta.begin(), beta.end());
      const RationalVector c = to_root_coords.apply(b);
      const bool positive = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
      if (!positive) continue;
      root_index[beta] = r.positive_roots.size();
      r.positive_roots.push_back(beta);
      // <mu, w coroot_i> = (w^{-1} mu)_i: row i of the inverse matrix.
      const auto& inv = r.weyl[r.inverse(w)].matrix;
      Weight functional(inv.begin() + static_cast<long>(i * k), inv.begin() + static_cast<long>((i + 1) * k));
      if (std::any_of(functional.begin(), functional.end(), [](std::int64_t x) { return x < 0; }))
        throw Error("positive root with a non-positive coroot");
      r.coroots.push_back(std::move(functional));
    }

  // Length as the number of positive roots made negative; must agree with BFS.
  for (auto& e : r.weyl) {
    std::size_t inversions = 0;
    for (const auto& beta : r.positive_roots) {
      Weight image(k, 0);
      for (std::size_t row = 0; row < k; ++row)
        for (std::size_t c = 0; c < k; ++c) image[row] += e.matrix[row * k + c] * beta[c];
      if (!root_index.count(image)) ++inversions;
    }
    if (inversions != e.length) throw Error("Weyl group length mismatch");
  }
  r.w0 = static_cast<std::size_t>(
      std::max_element(r.weyl.begin(), r.weyl.end(),
                       [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; }) -
      r.weyl.begin());
  return r;
}

Weight RootSystemData::apply(std::size_t w, const Weight& mu) const {
  if (mu.size() != k) throw Error("weight has " + std::to_string(mu.size()) + " coordinates, expected " + std::to_string(k));
  const auto& m = weyl.at(w).matrix;
  Weight out(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i] += m[i * k + j] * mu[j];
  return out;
}

RationalVector RootSystemData::apply(std::size_t w, const RationalVector& mu) const {
  if (mu.size() != k) throw Error("weight dimension mismatch");
  const auto& m = weyl.at(w).matrix;
  RationalVector out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i] += Rational(static_cast<long>(m[i * k + j])) * mu[j];
  return out;
}

std::size_t RootSystemData::index_of(const std::vector<std::int64_t>& matrix) const {
  for (std::size_t i = 0; i < weyl.size(); ++i)
    if (weyl[i].matrix == matrix) return i;
  throw Error("matrix is not a Weyl group element");
}

std::size_t RootSystemData::multiply(std::size_t a, std::size_t b) const {
  return index_of(mat_mul(weyl.at(a).matrix, weyl.at(b).matrix, k));
}

std::size_t RootSystemData::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < weyl.size(); ++b)
    if (mat_mul(weyl.at(a).matrix, weyl[b].matrix, k) == identity(k)) return b;
  throw Error("element has no inverse");
}

std::int64_t RootSystemData::pairing(const Weight& mu, std::size_t root) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < k; ++j) s += coroots.at(root)[j] * mu.at(j);
  return s;
}

bool RootSystemData::is_dominant(const Weight& mu) const {
  return std::all_of(mu.begin(), mu.end(), [](std::int64_t x) { return x >= 0; });
}

bool RootSystemData::is_regular(const Weight& mu) const {
  for (std::size_t a = 0; a < positive_roots.size(); ++a)
    if (pairing(mu, a) == 0) return false;
  return true;
}

Weight affine_action(const RootSystemData& r, std::size_t w, const Weight& mu) {
  Weight shifted = mu;
  for (std::size_t j = 0; j < r.k; ++j) shifted.at(j) += r.rho[j];
  Weight out = r.apply(w, shifted);
  for (std::size_t j = 0; j < r.k; ++j) out[j] -= r.rho[j];
  return out;
}

std::optional<Induced> induce(const RootSystemData& r, const Weight& mu) {
  Weight shifted = mu;
  for (std::size_t j = 0; j < r.k; ++j) shifted.at(j) += r.rho[j];
  if (!r.is_regular(shifted)) return std::nullopt;
  for (std::size_t w = 0; w < r.weyl.size(); ++w) {
    Weight image = affine_action(r, w, mu);
    if (r.is_dominant(image)) return Induced{r.weyl[w].length % 2 == 0 ? 1 : -1, std::move(image), w};
  }
  throw Error("no Weyl element makes a regular weight dominant");
}

Weight star(const RootSystemData& r, const Weight& mu) {
  Weight out = r.apply(r.w0, mu);
  for (auto& x : out) x = -x;
  return out;
}

RationalVector star(const RootSystemData& r, const RationalVector& mu) {
  RationalVector out = r.apply(r.w0, mu);
  for (auto& x : out) x = -x;
  return out;
}

Wall wall_of(const RootSystemData& r, const Weight& dominant) {
  if (!r.is_dominant(dominant)) throw Error("weight " + format_weight(dominant) + " is not dominant");
  Wall s;
  for (std::size_t j = 0; j < r.k; ++j)
    if (dominant[j] > 0) s.support.push_back(j);
  return s;
}

std::string format_wall(const RootSystemData& r, const Wall& s) {
  if (s.support.empty()) return "{0}";
  if (s.support.size() == r.k) return "interior";
  std::string out = "span";
  for (auto j : s.support) out += " lambda" + std::to_string(j + 1);
  return out;
}

WallData wall_data(const RootSystemData& r, const Wall& s) {
  WallData d;
  d.rho_sigma = RationalVector(r.k);
  for (std::size_t a = 0; a < r.positive_roots.size(); ++a) {
    const bool vanishes = std::all_of(s.support.begin(), s.support.end(),
                                      [&](std::size_t j) { return r.coroots[a][j] == 0; });
    if (!vanishes) continue;
    d.roots.push_back(a);
    for (std::size_t j = 0; j < r.k; ++j) d.rho_sigma[j] += Rational(static_cast<long>(r.positive_roots[a][j]), 2);
  }
  for (auto& x : d.rho_sigma) x.canonicalize();

  // The longest element of the wall's Weyl group: the element of W
  // generated by the reflections fixing the wall that makes all of its
  // positive roots negative and permutes the others.
  std::map<Weight, bool> is_positive;
  for (const auto& beta : r.positive_roots) is_positive[beta] = true;
  std::vector<bool> in_sigma(r.positive_roots.size(), false);
  for (auto a : d.roots) in_sigma[a] = true;
  for (std::size_t w = 0; w < r.weyl.size(); ++w) {
    bool ok = true;
    for (std::size_t a = 0; a < r.positive_roots.size() && ok; ++a) {
      const bool stays_positive = is_positive.count(r.apply(w, r.positive_roots[a])) > 0;
      ok = in_sigma[a] ? !stays_positive : stays_positive;
    }
    if (ok) {
      d.w_sigma = w;
      return d;
    }
  }
  throw Error("no longest element for the wall");
}

namespace {

Weight minus(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= b.at(j);
  return out;
}

bool dominant_rational(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; });
}

}  // namespace

ReflectConditions reflect_conditions(const RootSystemData& r, const Weight& lambda) {
  const Wall sigma = wall_of(r, lambda);
  const WallData d = wall_data(r, sigma);
  ReflectConditions c;

  Weight neg = lambda;
  for (auto& x : neg) x = -x;
  for (std::size_t w = 0; w < r.weyl.size(); ++w)
    if (r.is_dominant(affine_action(r, w, neg))) {
      c.reflects = true;
      c.witness = w;
      break;
    }

  const Weight shifted = minus(lambda, r.rho);
  c.regular = r.is_regular(shifted);
  const Weight image = r.apply(d.w_sigma, shifted);
  c.dominant_regular = r.is_dominant(image) && r.is_regular(image);

  RationalVector bound(r.k);
  for (std::size_t j = 0; j < r.k; ++j) bound[j] = Rational(lambda[j]) - 2 * (Rational(r.rho[j]) - d.rho_sigma[j]);
  c.dominant = dominant_rational(bound);
  return c;
}

std::optional<Reflection> reflect(const RootSystemData& r, const Weight& lambda) {
  if (!r.is_dominant(lambda)) throw Error("weight " + format_weight(lambda) + " is not dominant");
  const Weight shifted = minus(lambda, r.rho);
  if (!r.is_regular(shifted)) return std::nullopt;

  const WallData d = wall_data(r, wall_of(r, lambda));
  const std::size_t w = r.multiply(r.w0, d.w_sigma);
  Weight neg = lambda;
  for (auto& x : neg) x = -x;
  Weight result = affine_action(r, w, neg);

  const RationalVector rho_sigma_star = star(r, d.rho_sigma);
  const Weight lambda_star = star(r, lambda);
  for (std::size_t j = 0; j < r.k; ++j)
    if (Rational(result[j]) != Rational(lambda_star[j]) - 2 * (Rational(r.rho[j]) - rho_sigma_star[j]))
      throw Error("reflection identity violated");
  if (!r.is_dominant(result)) throw Error("w0 w_sigma does not reflect -lambda into the chamber");
  return Reflection{w, std::move(result)};
}

Wall principal_wall(const RootSystemData& r, const std::vector<RationalVector>& points) {
  if (points.empty()) throw Error("empty point set");
  std::vector<bool> used(r.k, false);
  for (const auto& p : points) {
    if (p.size() != r.k) throw Error("point dimension mismatch");
    for (std::size_t j = 0; j < r.k; ++j) {
      if (p[j] < 0) throw Error("point (" + format_vector(p) + ") is not dominant");
      if (p[j] > 0) used[j] = true;
    }
  }
  Wall s;
  for (std::size_t j = 0; j < r.k; ++j)
    if (used[j]) s.support.push_back(j);
  return s;
}

bool dual_support_bound(const RootSystemData& r, const LabelledPolyhedron& delta, const Weight& nu) {
  if (delta.dim() != r.k) throw Error("polytope dimension does not match the rank");
  const auto lattice = face_lattice(delta);
  if (lattice.empty()) throw Error("empty polyhedron");
  if (!lattice.vrep.bounded()) throw Error("unbounded polyhedron");
  const WallData d = wall_data(r, principal_wall(r, lattice.vrep.vertices));
  RationalVector point = star(r, RationalVector(nu.begin(), nu.end()));
  for (std::size_t j = 0; j < r.k; ++j) point[j] += 2 * (Rational(r.rho[j]) - d.rho_sigma[j]);
  return delta.contains(point) && lattice.locate(delta, point) == 0;
}

Weight parse_weight(const std::string& csv) {
  Weight out;
  for (const auto& q : parse_rational_csv(csv)) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw Error("weight entry '" + to_string(q) + "' is not an integer");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

RationalVector parse_rational_csv(const std::string& csv) {
  RationalVector out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw Error("empty entry in '" + csv + "'");
    out.push_back(parse_rational(item.substr(a, b - a + 1)));
  }
  if (out.empty()) throw Error("empty list");
  return out;
}

std::string format_weight(const Weight& mu) {
  std::string s;
  for (std::size_t j = 0; j < mu.size(); ++j) s += (j ? "," : "") + std::to_string(mu[j]);
  return s;
}

}  // namespace delzant
