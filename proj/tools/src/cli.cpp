#include "cli.hpp"

#include "delzant/catalog.hpp"
#include "delzant/characters.hpp"
#include "delzant/desingularize.hpp"
#include "delzant/subdivision.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace delzant::cli {

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Options {
  std::string in, delta, subdivision, out_file;
  long m = 1;
  long mmax = 0;
  std::string type = "A1";
  std::string mu, lambda, z, xi, eta, word, point;
  std::int64_t nu = -1;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  bool interior = false;
};

LabelledPolyhedron load(const std::string& path) {
  if (path.empty()) throw Error("missing --in <file>");
  std::ifstream file(path);
  if (!file) throw Error("cannot open file '" + path + "'");
  return read_lpoly(file, path);
}

Subdivision load_subdivision(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open file '" + path + "'");
  return read_subdivision(file, path);
}

void save(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw Error("cannot write file '" + path + "'");
  body(file);
}

IntVector parse_int_csv(const std::string& csv, std::size_t dim, const char* flag) {
  if (csv.empty()) throw Error(std::string("missing ") + flag);
  const auto q = parse_rational_csv(csv);
  if (q.size() != dim) throw Error(std::string(flag) + " needs " + std::to_string(dim) + " entries");
  IntVector out;
  for (const auto& x : q) {
    if (x.get_den() != 1) throw Error(std::string(flag) + " entries must be integers");
    out.push_back(x.get_num());
  }
  return out;
}

RationalVector parse_point(const std::string& csv, std::size_t dim, const char* flag) {
  if (csv.empty()) throw Error(std::string("missing ") + flag);
  auto q = parse_rational_csv(csv);
  if (q.size() != dim) throw Error(std::string(flag) + " needs " + std::to_string(dim) + " entries");
  return q;
}

Weight parse_mu(const RootSystemData& r, const std::string& csv) {
  if (csv.empty()) throw Error("missing --mu");
  auto mu = parse_weight(csv);
  if (mu.size() != r.k) throw Error("--mu needs " + std::to_string(r.k) + " entries for " + to_string(r.type));
  return mu;
}

std::string format_word(const std::vector<std::size_t>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (auto i : word) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

std::string format_tight(const std::vector<std::size_t>& tight) {
  std::string s = "{";
  for (std::size_t i = 0; i < tight.size(); ++i) s += (i ? "," : "") + std::to_string(tight[i]);
  return s + "}";
}

int emit(std::ostream& out, const Report& r) {
  r.write(out);
  return r.passed() ? kOk : kFailed;
}

long default_mmax(const LabelledPolyhedron& p) {
  const auto lattice = face_lattice(p);
  if (lattice.empty()) throw Error("empty polyhedron");
  const long d = static_cast<long>(lattice.faces.front().dim);
  return (d + 1) * lattice_index(p).get_si() + 2;
}

// polytope ------------------------------------------------------------------

int polytope_faces(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  const auto lattice = face_lattice(p);
  out << "faces: " << lattice.faces.size() << '\n';
  for (const auto& f : lattice.faces)
    out << "face: dim " << f.dim << " tight " << format_tight(f.tight) << " excess " << excess(p, f) << " sample "
        << format_vector(f.sample) << '\n';
  return kOk;
}

int polytope_excess(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  const auto lattice = face_lattice(p);
  const auto d = excess_decomposition(p, lattice);
  out << "pieces: " << d.pieces.size() << '\n';
  for (const auto& piece : d.pieces) {
    out << "piece: excess " << piece.excess << " faces " << piece.faces.size();
    if (piece.top) out << " top " << format_tight(lattice.faces[*piece.top].tight);
    out << '\n';
  }
  out << "depth: " << depth(p) << '\n';
  out << "constant excess: " << (has_constant_excess(p, lattice) ? "yes" : "no") << '\n';
  return kOk;
}

int polytope_desing(const Options& o, std::ostream& out) {
  const auto trace = canonical_desingularization(load(o.in));
  for (const auto& s : trace.steps)
    out << "step: " << format_label(s.added) << " epsilon " << to_string(s.epsilon) << " center "
        << format_tight(s.center) << " excess " << s.center_excess << '\n';
  write_lpoly(out, trace.result);
  save(o.out_file, [&](std::ostream& f) { write_lpoly(f, trace.result); });
  return kOk;
}

int polytope_shift(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  const auto r = o.eta.empty() ? shift_desingularization(p) : shift_desingularization(p, parse_point(o.eta, p.size(), "--eta"));
  out << "eta: " << format_vector(r.eta) << '\n';
  if (r.delta != 0) out << "delta: " << to_string(r.delta) << '\n';
  write_lpoly(out, r.result);
  save(o.out_file, [&](std::ostream& f) { write_lpoly(f, r.result); });
  return kOk;
}

int polytope_count(const Options& o, std::ostream& out) {
  out << count_points(load(o.in), o.m, o.interior ? Region::interior : Region::closed) << '\n';
  return kOk;
}

int polytope_rr(const Options& o, std::ostream& out) {
  toric_rr(load(o.in), o.m).write(out);
  return kOk;
}

int polytope_ehrhart(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  const auto q = ehrhart_fit(p, o.mmax > 0 ? o.mmax : default_mmax(p));
  out << "degree: " << q.degree << '\n' << "period: " << q.period << '\n';
  for (std::size_t r = 0; r < q.coeffs.size(); ++r) out << "residue " << r << ": " << format_vector(q.coeffs[r], " ") << '\n';
  return kOk;
}

int polytope_reciprocity(const Options& o, std::ostream& out) {
  return emit(out, reciprocity_check(load(o.in), o.mmax > 0 ? o.mmax : 6));
}

int polytope_brion(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  const auto z = parse_point(o.z, p.dim(), "--z");
  const auto value = brion_evaluate(p, z);
  const auto direct = toric_rr(p, 1).evaluate(z);
  Report r;
  r.add("brion", to_string(value));
  r.check(value == direct, "enumerated", to_string(direct));
  return emit(out, r);
}

int polytope_minimalize(const Options& o, std::ostream& out) {
  write_lpoly(out, minimalize(load(o.in)));
  return kOk;
}

int polytope_orders(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  const auto lattice = face_lattice(p);
  for (const auto& f : lattice.faces) {
    out << "face " << format_tight(f.tight) << ": ";
    if (rank_of_labels(p, f.tight) != f.tight.size()) {
      out << "dependent labels\n";
      continue;
    }
    out << structure_group_order(p, f) << '\n';
  }
  return kOk;
}

// weyl ----------------------------------------------------------------------

int weyl_group(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  out << "order: " << r.weyl.size() << '\n';
  out << "w0: " << format_word(r.weyl[r.w0].word) << '\n';
  out << "rho: " << format_weight(r.rho) << '\n';
  for (std::size_t w = 0; w < r.weyl.size(); ++w)
    out << "w" << w << ": length " << r.weyl[w].length << " word " << format_word(r.weyl[w].word) << '\n';
  return kOk;
}

std::size_t element_of_word(const RootSystemData& r, const std::string& csv) {
  std::size_t w = 0;
  if (csv.empty() || csv == "e") return w;
  for (const auto& x : parse_weight(csv)) {
    if (x < 1 || static_cast<std::size_t>(x) > r.k) throw Error("--word entries must be 1.." + std::to_string(r.k));
    std::size_t s = 0;
    while (!(r.weyl[s].word.size() == 1 && r.weyl[s].word[0] == static_cast<std::size_t>(x - 1))) ++s;
    w = r.multiply(w, s);
  }
  return w;
}

int weyl_action(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  const auto w = element_of_word(r, o.word);
  out << format_weight(affine_action(r, w, parse_mu(r, o.mu))) << '\n';
  return kOk;
}

int weyl_induce(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  const auto ind = induce(r, parse_mu(r, o.mu));
  if (!ind) {
    out << "0\n";
    return kOk;
  }
  out << (ind->sign < 0 ? "-" : "") << "chi " << format_weight(ind->weight) << '\n';
  return kOk;
}

int weyl_star(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  out << format_weight(star(r, parse_mu(r, o.mu))) << '\n';
  return kOk;
}

int weyl_reflect(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  const auto lambda = o.lambda.empty() ? parse_mu(r, o.mu) : parse_mu(r, o.lambda);
  if (!r.is_dominant(lambda)) throw Error("lambda must be dominant");
  const auto c = reflect_conditions(r, lambda);
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  Report rep;
  rep.add("wall", format_wall(r, wall_of(r, lambda)));
  rep.add("reflects", yn(c.reflects));
  rep.add("lambda - rho regular", yn(c.regular));
  rep.add("w_sigma(lambda - rho) dominant regular", yn(c.dominant_regular));
  rep.add("lambda - 2(rho - rho_sigma) dominant", yn(c.dominant));
  rep.check(c.reflects == c.regular && c.regular == c.dominant_regular && c.dominant_regular == c.dominant,
            "conditions agree");
  if (const auto refl = reflect(r, lambda)) {
    rep.add("w", format_word(r.weyl[refl->w].word));
    rep.add("w.(-lambda)", format_weight(refl->result));
  }
  return emit(out, rep);
}

int weyl_wall(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  const auto mu = parse_mu(r, o.mu);
  if (!r.is_dominant(mu)) throw Error("--mu must be dominant");
  const auto wall = wall_of(r, mu);
  const auto data = wall_data(r, wall);
  out << "wall: " << format_wall(r, wall) << '\n';
  out << "rho_sigma: " << format_vector(data.rho_sigma) << '\n';
  out << "w_sigma: " << format_word(r.weyl[data.w_sigma].word) << '\n';
  return kOk;
}

int weyl_principal(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  const auto delta = load(o.in);
  if (delta.dim() != r.k) throw Error("polytope dimension does not match the rank");
  const auto vrep = vertex_representation(delta);
  if (vrep.empty()) throw Error("empty polyhedron");
  if (!vrep.bounded()) throw Error("unbounded polyhedron");
  out << "principal wall: " << format_wall(r, principal_wall(r, vrep.vertices)) << '\n';
  if (!o.mu.empty())
    out << "dual support bound: " << (dual_support_bound(r, delta, parse_mu(r, o.mu)) ? "yes" : "no") << '\n';
  return kOk;
}

// verify --------------------------------------------------------------------

int verify_glue(const Options& o, std::ostream& out) {
  if (o.delta.empty() || o.subdivision.empty()) throw Error("verify glue needs --delta and --subdivision");
  const auto delta = load(o.delta);
  const auto s = load_subdivision(o.subdivision);
  if (s.dim != delta.dim()) throw Error("subdivision and delta dimensions differ");
  return emit(out, glue_count_check(delta, s));
}

Subdivision subdivision_from(const Options& o) {
  if (!o.subdivision.empty()) return load_subdivision(o.subdivision);
  const auto r = RootSystemData::make(parse_root_type(o.type));
  return dual_subdivision(r, parse_point(o.lambda, r.k, "--lambda")).subdivision;
}

int verify_euler(const Options& o, std::ostream& out) {
  return emit(out, euler_check(subdivision_from(o), o.samples, o.seed));
}

int verify_dual_subdivision(const Options& o, std::ostream& out) {
  const auto r = RootSystemData::make(parse_root_type(o.type));
  const auto d = dual_subdivision(r, parse_point(o.lambda, r.k, "--lambda"));
  Report rep;
  bool dims = true;
  for (std::size_t i = 0; i < d.walls.size(); ++i) {
    const auto& [sigma, tau] = d.walls[i];
    const std::size_t dim = face_lattice(d.subdivision.cells[i]).faces.front().dim;
    const std::size_t codim = tau.support.size() - sigma.support.size();
    dims = dims && r.k - dim == codim;
    rep.add("cell " + std::to_string(i), "sigma " + format_wall(r, sigma) + ", tau " + format_wall(r, tau) +
                                              ", codim " + std::to_string(r.k - dim));
  }
  rep.check(dims, "codim = |tau| - |sigma|");
  rep.merge(validate(d.subdivision));
  rep.merge(euler_check(d.subdivision, o.samples, o.seed));
  save(o.out_file, [&](std::ostream& f) { write_subdivision(f, d.subdivision); });
  return emit(out, rep);
}

int verify_clebsch_gordan(const Options& o, std::ostream& out) {
  if (!o.lambda.empty() || o.nu >= 0) {
    const auto lambda = parse_int_csv(o.lambda, 1, "--lambda");
    if (o.nu < 0) throw Error("missing --nu");
    GCharacter product;
    const auto rep = verify_product_orbits(lambda[0].get_si(), o.nu, &product);
    product.write(out);
    return emit(out, rep);
  }
  Report rep;
  for (std::int64_t l = 0; l <= 6; ++l)
    for (std::int64_t n = 0; n <= 6; ++n) {
      const auto one = verify_product_orbits(l, n);
      rep.check(one.passed(), "chi " + std::to_string(l) + " x chi " + std::to_string(n));
    }
  return emit(out, rep);
}

int verify_quantum_dh(const Options& o, std::ostream& out) {
  const auto p = load(o.in);
  RationalVector mu;
  if (o.point.empty()) {
    const auto vrep = vertex_representation(p);
    if (vrep.empty()) throw Error("empty polyhedron");
    mu = vrep.vertices.front();
  } else {
    mu = parse_point(o.point, p.dim(), "--point");
  }
  return emit(out, quantum_dh_check(p, mu, o.mmax > 0 ? o.mmax : 12));
}

int verify_genus_cmd(const Options& o, std::ostream& out) {
  if (o.in.empty()) return emit(out, verify_genus(o.seed, o.samples == 100 ? 50 : o.samples));
  const auto p = load(o.in);
  return emit(out, verify_genus(p, parse_int_csv(o.xi, p.dim(), "--xi"), o.m));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Labelled polytopes, lattice counts and Weyl characters", "delzant"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  int (*fn)(const Options&, std::ostream&)) {
    auto* c = group->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto with_in = [&](CLI::App* c) { c->add_option("--in", o.in, ".lpoly input file"); };
  auto with_m = [&](CLI::App* c) { c->add_option("-m", o.m, "dilation factor")->capture_default_str(); };
  auto with_mmax = [&](CLI::App* c) { c->add_option("--mmax", o.mmax, "largest dilation sampled"); };
  auto with_type = [&](CLI::App* c) { c->add_option("--type", o.type, "A1, A2, A3, B2 or G2")->capture_default_str(); };
  auto with_mu = [&](CLI::App* c) { c->add_option("--mu", o.mu, "weight, comma-separated integers"); };
  auto with_lambda = [&](CLI::App* c) { c->add_option("--lambda", o.lambda, "comma-separated rationals"); };
  auto with_seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    c->add_option("--samples", o.samples, "number of sample points")->capture_default_str();
  };
  auto with_out = [&](CLI::App* c) { c->add_option("--out", o.out_file, "also write the result to this file"); };

  auto* polytope = app.add_subcommand("polytope", "labelled polyhedra and lattice counts");
  polytope->require_subcommand(1);
  with_in(leaf(polytope, "faces", "face lattice with tight sets", polytope_faces));
  with_in(leaf(polytope, "excess", "excess decomposition and depth", polytope_excess));
  {
    auto* c = leaf(polytope, "desing", "canonical desingularization", polytope_desing);
    with_in(c);
    with_out(c);
  }
  {
    auto* c = leaf(polytope, "shift", "shift desingularization", polytope_shift);
    with_in(c);
    with_out(c);
    c->add_option("--eta", o.eta, "shift per label; automatic when omitted");
  }
  {
    auto* c = leaf(polytope, "count", "lattice points of mP", polytope_count);
    with_in(c);
    with_m(c);
    c->add_flag("--interior", o.interior, "count relative interior points");
  }
  {
    auto* c = leaf(polytope, "rr", "toric character of mP", polytope_rr);
    with_in(c);
    with_m(c);
  }
  {
    auto* c = leaf(polytope, "ehrhart", "Ehrhart quasi-polynomial", polytope_ehrhart);
    with_in(c);
    with_mmax(c);
  }
  {
    auto* c = leaf(polytope, "reciprocity", "Ehrhart reciprocity", polytope_reciprocity);
    with_in(c);
    with_mmax(c);
  }
  {
    auto* c = leaf(polytope, "brion", "Brion's formula against enumeration", polytope_brion);
    with_in(c);
    c->add_option("--z", o.z, "evaluation point, comma-separated rationals");
  }
  with_in(leaf(polytope, "minimalize", "drop labels that miss P", polytope_minimalize));
  with_in(leaf(polytope, "orders", "structure group orders", polytope_orders));

  auto* weyl = app.add_subcommand("weyl", "root systems and induction");
  weyl->require_subcommand(1);
  with_type(leaf(weyl, "group", "Weyl group elements", weyl_group));
  {
    auto* c = leaf(weyl, "action", "rho-shifted action w.mu", weyl_action);
    with_type(c);
    with_mu(c);
    c->add_option("--word", o.word, "simple reflections, comma-separated, 1-based");
  }
  for (auto [name, help, fn] : {std::tuple{"induce", "induction from the torus", weyl_induce},
                                std::tuple{"star", "mu* = -w0 mu", weyl_star},
                                std::tuple{"wall", "wall of a dominant weight", weyl_wall}}) {
    auto* c = leaf(weyl, name, help, fn);
    with_type(c);
    with_mu(c);
  }
  {
    auto* c = leaf(weyl, "reflect", "reflection conditions for -lambda", weyl_reflect);
    with_type(c);
    with_lambda(c);
    with_mu(c);
  }
  {
    auto* c = leaf(weyl, "principal", "principal wall of a polytope", weyl_principal);
    with_type(c);
    with_in(c);
    with_mu(c);
  }

  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);
  {
    auto* c = leaf(verify, "glue", "lattice-count gluing identity", verify_glue);
    c->add_option("--delta", o.delta, ".lpoly polytope");
    c->add_option("--subdivision", o.subdivision, "cells as .lpoly blocks separated by ---");
  }
  {
    auto* c = leaf(verify, "euler", "Euler identity of a subdivision", verify_euler);
    c->add_option("--subdivision", o.subdivision, "cells as .lpoly blocks");
    with_type(c);
    with_lambda(c);
    with_seed(c);
  }
  {
    auto* c = leaf(verify, "dual-subdivision", "dual subdivision around lambda", verify_dual_subdivision);
    with_type(c);
    with_lambda(c);
    with_seed(c);
    with_out(c);
  }
  leaf(verify, "vergne", "the SU(2) example in two ways", [](const Options&, std::ostream& out) {
    const auto rep = verify_vergne();
    return emit(out, rep);
  });
  {
    auto* c = leaf(verify, "clebsch-gordan", "products of SU(2) orbits", verify_clebsch_gordan);
    with_lambda(c);
    c->add_option("--nu", o.nu, "second highest weight");
  }
  {
    auto* c = leaf(verify, "quantum-dh", "quasi-polynomial multiplicities", verify_quantum_dh);
    with_in(c);
    with_mmax(c);
    c->add_option("--point", o.point, "point of P, comma-separated rationals");
  }
  {
    auto* c = leaf(verify, "genus", "vertex localization of the rigid bundle", verify_genus_cmd);
    with_in(c);
    with_m(c);
    with_seed(c);
    c->add_option("--xi", o.xi, "generic direction, comma-separated integers");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace delzant::cli
