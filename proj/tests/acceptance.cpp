// One pass/fail line per acceptance criterion, with wall-clock time.
// Exit status is the number of failed criteria.

#include "delzant/catalog.hpp"
#include "delzant/characters.hpp"
#include "delzant/desingularize.hpp"
#include "delzant/subdivision.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

using namespace delzant;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

using Criterion = std::function<Outcome()>;

Rational q(long a, long b = 1) { return make_rational(a, b); }

bool geometrically_simple(const LabelledPolyhedron& p) {
  const auto l = face_lattice(p);
  const std::size_t d = l.faces.front().dim;
  for (auto v : l.vertex_faces())
    if (edge_directions(l, v).size() != d) return false;
  return true;
}

Exponent to_exponent(const IntVector& v) {
  Exponent e;
  for (const auto& x : v) e.push_back(x.get_si());
  return e;
}

Outcome reciprocity() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [name, p] : catalog::test_polytopes(0, 20)) {
    const auto r = reciprocity_check(p, 6);
    if (!r.passed()) {
      o.pass = false;
      o.note += " " + name;
    }
    ++n;
  }
  o.note = std::to_string(n) + " polytopes, m <= 6" + (o.note.empty() ? "" : "; failed:" + o.note);
  return o;
}

Outcome brion() {
  Outcome o;
  const std::vector<RationalVector> points{{q(2), q(5, 3), q(-3, 7)}, {q(-1, 2), q(7), q(11, 5)}, {q(3, 4), q(-5), q(13)}};
  std::size_t n = 0;
  for (const auto& [name, p] : catalog::test_polytopes(0, 20)) {
    if (!is_simply_laced(p) || lattice_index(p) != 1 || !geometrically_simple(p)) continue;
    ++n;
    const auto rr = toric_rr(p, 1);
    for (const auto& z : points) {
      const RationalVector zz(z.begin(), z.begin() + static_cast<long>(p.dim()));
      if (brion_evaluate(p, zz) != rr.evaluate(zz)) {
        o.pass = false;
        o.note += " " + name;
      }
    }
  }
  o.note = std::to_string(n) + " simply-laced polytopes x 3 points" + (o.note.empty() ? "" : "; failed:" + o.note);
  return o;
}

Outcome vergne() {
  const auto r = verify_vergne();
  Outcome o{r.passed(), "-chi 0 from the toric dual count and the dual formula"};
  bool total = false;
  for (const auto& [k, v] : r.lines()) total |= k == "toric total" && v == "-1";
  o.pass = o.pass && total;
  return o;
}

// Brute-force antisymmetrization: the alternant of mu + rho either vanishes
// or has one strictly dominant exponent lambda + rho.
std::optional<std::pair<int, Weight>> alternant_oracle(const RootSystemData& r, const Weight& mu) {
  Weight shifted = mu;
  for (std::size_t j = 0; j < r.k; ++j) shifted[j] += r.rho[j];
  LaurentCharacter alt(r.k);
  for (std::size_t w = 0; w < r.weyl.size(); ++w) alt.add(r.apply(w, shifted), r.weyl[w].length % 2 ? -1 : 1);
  if (alt.empty()) return std::nullopt;
  for (const auto& [e, c] : alt.terms())
    if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x > 0; })) {
      Weight lambda = e;
      for (std::size_t j = 0; j < r.k; ++j) lambda[j] -= r.rho[j];
      return std::pair{c > 0 ? 1 : -1, lambda};
    }
  throw Error("alternant without a dominant term");
}

void for_each_weight(std::size_t k, std::int64_t lo, std::int64_t hi, const std::function<void(const Weight&)>& f) {
  Weight mu(k, lo);
  for (;;) {
    f(mu);
    std::size_t j = 0;
    while (j < k && ++mu[j] > hi) mu[j++] = lo;
    if (j == k) return;
  }
}

Outcome induction() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  for (auto [t, bound] : {std::pair{RootType::A1, 5}, std::pair{RootType::A2, 4}, std::pair{RootType::B2, 4}}) {
    const auto r = RootSystemData::make(t);
    for_each_weight(r.k, -bound, bound, [&](const Weight& mu) {
      ++n;
      const auto ind = induce(r, mu);
      const auto oracle = alternant_oracle(r, mu);
      const bool agree = ind.has_value() == oracle.has_value() &&
                         (!ind || (ind->sign == oracle->first && ind->weight == oracle->second));
      bad += !agree;
    });
  }
  o.pass = bad == 0;
  o.note = std::to_string(n) + " weights" + (bad ? ", " + std::to_string(bad) + " disagreements" : "");
  return o;
}

Outcome reflection() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  for (auto t : {RootType::A1, RootType::A2, RootType::B2}) {
    const auto r = RootSystemData::make(t);
    for_each_weight(r.k, 0, 4, [&](const Weight& lambda) {
      ++n;
      const auto c = reflect_conditions(r, lambda);
      bool ok = c.reflects == c.regular && c.regular == c.dominant_regular && c.dominant_regular == c.dominant;
      if (c.reflects) {
        const auto data = wall_data(r, wall_of(r, lambda));
        const auto refl = reflect(r, lambda);
        ok = ok && refl && refl->w == r.multiply(r.w0, data.w_sigma);
        if (refl) {
          const auto ls = star(r, lambda);
          const auto rs = star(r, data.rho_sigma);
          for (std::size_t j = 0; j < r.k; ++j)
            ok = ok && Rational(refl->result[j]) == Rational(ls[j]) - 2 * (Rational(r.rho[j]) - rs[j]);
          ok = ok && affine_action(r, refl->w, [&] {
                       Weight neg = lambda;
                       for (auto& x : neg) x = -x;
                       return neg;
                     }()) == refl->result;
        }
      } else {
        ok = ok && !reflect(r, lambda);
      }
      bad += !ok;
    });
  }
  o.pass = bad == 0;
  o.note = std::to_string(n) + " dominant weights" + (bad ? ", " + std::to_string(bad) + " violations" : "");
  return o;
}

Outcome euler() {
  Outcome o;
  std::mt19937_64 rng(6);
  static const long dens[] = {7, 11, 13, 17, 19, 23, 29};
  std::size_t n = 0;
  for (auto t : {RootType::A2, RootType::A3, RootType::B2}) {
    const auto r = RootSystemData::make(t);
    for (int trial = 0; trial < 5; ++trial) {
      RationalVector lambda;
      for (std::size_t j = 0; j < r.k; ++j) lambda.push_back(q(static_cast<long>(rng() % 6) + 1, dens[rng() % 7]));
      const auto d = dual_subdivision(r, lambda);
      bool ok = validate(d.subdivision).passed() && euler_check(d.subdivision, 100, rng()).passed();
      for (std::size_t i = 0; i < d.walls.size(); ++i) {
        const auto dim = face_lattice(d.subdivision.cells[i]).faces.front().dim;
        ok = ok && r.k - dim == d.walls[i].second.support.size() - d.walls[i].first.support.size();
      }
      if (!ok) {
        o.pass = false;
        o.note += " " + to_string(t) + "@" + format_vector(lambda);
      }
      ++n;
    }
  }
  o.note = std::to_string(n) + " dual subdivisions, 100 points each" + (o.note.empty() ? "" : "; failed:" + o.note);
  return o;
}

Outcome gluing() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t tested = 0;
  for (int trial = 0; tested < 20 && trial < 1000; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(trial) % 3;
    const auto delta = catalog::random_lattice_polytope(rng, dim);
    IntVector normal(dim);
    for (auto& x : normal) x = static_cast<long>(rng() % 5) - 2;
    if (is_zero(std::span<const Integer>(normal))) continue;
    std::vector<Rational> cuts{q(static_cast<long>(rng() % 6) - 1)};
    if (rng() % 2) cuts.push_back(cuts[0] + q(static_cast<long>(rng() % 3) + 1));
    const auto s = hyperplane_split(normal, cuts);
    if (!is_admissible(s, delta)) continue;
    ++tested;
    if (!glue_count_check(delta, s).passed()) o.pass = false;
  }
  o.pass = o.pass && tested == 20;
  o.note = std::to_string(tested) + " admissible (polytope, split) pairs, character identity";
  return o;
}

Outcome toric_decomposition() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [name, p] : catalog::test_polytopes(0, 20)) {
    for (long m = 0; m <= 5; ++m) {
      // Independent enumeration of mP against the character.
      LaurentCharacter direct(p.dim());
      for_each_lattice_point(p, m, Region::closed, [&](const IntVector& mu) { direct.add(to_exponent(mu), 1); });
      const auto rr = toric_rr(p, m);
      const bool zero_ok = rr.coefficient(Exponent(p.dim(), 0)) == (p.dilate(m).contains(RationalVector(p.dim())) ? 1 : 0);
      if (!(rr == direct) || !zero_ok || (m > 0 && !verify_decomposition_toric(p, m).passed())) {
        o.pass = false;
        o.note += " " + name + "@" + std::to_string(m);
      }
    }
    ++n;
  }
  o.note = std::to_string(n) + " polytopes, m <= 5" + (o.note.empty() ? "" : "; failed:" + o.note);
  return o;
}

Outcome clebsch_gordan() {
  Outcome o;
  for (std::int64_t l = 0; l <= 6; ++l)
    for (std::int64_t n = 0; n <= 6; ++n)
      if (!verify_product_orbits(l, n).passed()) {
        o.pass = false;
        o.note += " " + std::to_string(l) + "x" + std::to_string(n);
      }
  o.note = "0 <= lambda, nu <= 6" + (o.note.empty() ? "" : "; failed:" + o.note);
  return o;
}

Outcome quantum_dh() {
  Outcome o;
  QuasiPolynomial half, triangle;
  const auto segment = LabelledPolyhedron(1, {Label({1}, 0), Label({-2}, -1)});
  const bool a = quantum_dh_check(segment, RationalVector{q(1, 2)}, 12, &half).passed();
  const bool b = quantum_dh_check(catalog::weighted_triangle(), RationalVector{q(1, 2), q(1, 2)}, 12, &triangle).passed();
  o.pass = a && b && half.period == 2 && half.degree <= 1 && 2 % triangle.period == 0 && triangle.degree <= 2;
  o.note = "[0,1/2] period " + std::to_string(half.period) + ", weighted triangle period " +
           std::to_string(triangle.period) + ", m <= 12";
  return o;
}

Outcome genus() {
  const auto r = verify_genus(11, 50);
  return {r.passed(), "50 seeded (polytope, xi) pairs, one localized vertex each"};
}

Outcome desingularization() {
  Outcome o;
  const auto pyramid = catalog::egyptian_pyramid();
  const auto trace = canonical_desingularization(pyramid);
  const auto result = minimalize(trace.result);
  const bool canonical = trace.steps.size() == 1 && has_constant_excess(trace.result, face_lattice(trace.result)) &&
                         result.size() == 6;
  std::size_t shifted = 0;
  bool shift_ok = true;
  for (const auto& [name, p] : catalog::test_polytopes(0, 20)) {
    if (is_simple(p)) continue;
    ++shifted;
    const auto s = shift_desingularization(p);
    std::set<IntVector> original;
    for (const auto& l : p.labels()) original.insert(l.normal);
    const auto m = minimalize(s.result);
    bool normals = true;
    for (const auto& l : m.labels()) normals = normals && original.count(l.normal);
    shift_ok = shift_ok && has_constant_excess(s.result, face_lattice(s.result)) && normals;
  }
  o.pass = canonical && shift_ok;
  o.note = "pyramid: " + std::to_string(trace.steps.size()) + " step, " + std::to_string(result.size()) +
           " facets; shift on " + std::to_string(shifted) + " non-simple inputs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"Ehrhart reciprocity", reciprocity},
      {"Brion oracle", brion},
      {"SU(2) example", vergne},
      {"induction functor", induction},
      {"reflection conditions", reflection},
      {"Euler identity and dual subdivision", euler},
      {"gluing shadow", gluing},
      {"toric decomposition", toric_decomposition},
      {"Clebsch-Gordan", clebsch_gordan},
      {"quantum Duistermaat-Heckman", quantum_dh},
      {"arithmetic genus", genus},
      {"desingularization", desingularization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%2zu %-38s %s  %7.2f s  %s\n", i + 1, criteria[i].first, o.pass ? "pass" : "FAIL", secs, o.note.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
