#include "delzant/desingularize.hpp"

#include <algorithm>
#include <functional>

namespace delzant {

namespace {

// chain[a] = longest ascending chain of pieces starting at piece a.
std::vector<std::size_t> chain_lengths(const FaceLattice& lattice, const ExcessDecomposition& d) {
  const std::size_t n = d.pieces.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) below[a][b] = d.below(lattice, a, b);

  std::vector<std::optional<std::size_t>> memo(n);
  std::function<std::size_t(std::size_t)> up = [&](std::size_t a) -> std::size_t {
    if (memo[a]) return *memo[a];
    std::size_t best = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (below[a][b]) best = std::max(best, 1 + up(b));
    memo[a] = best;
    return best;
  };
  std::vector<std::size_t> out(n);
  for (std::size_t a = 0; a < n; ++a) out[a] = up(a);
  return out;
}

void require_nonempty(const FaceLattice& lattice) {
  if (lattice.empty()) throw Error("empty polyhedron");
}

LabelledPolyhedron with_label(const LabelledPolyhedron& p, const Label& l) {
  LabelledPolyhedron out = p;
  out.add(l);
  return out;
}

Label summed_label(const LabelledPolyhedron& p, const std::vector<std::size_t>& center, const Rational& eps) {
  IntVector v(p.dim());
  Rational r = eps;
  for (auto i : center) {
    for (std::size_t j = 0; j < p.dim(); ++j) v[j] += p.label(i).normal[j];
    r += p.label(i).offset;
  }
  if (is_zero(std::span<const Integer>(v))) throw Error("summed label vector is zero");
  return Label(std::move(v), r);
}

const std::vector<long> kPrimesFrom101 = [] {
  std::vector<long> primes;
  for (long n = 101; primes.size() < 512; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) primes.push_back(n);
  }
  return primes;
}();

}  // namespace

std::size_t depth(const LabelledPolyhedron& p) {
  const auto lattice = face_lattice(p);
  require_nonempty(lattice);
  const auto d = excess_decomposition(p, lattice);
  const auto chains = chain_lengths(lattice, d);
  return *std::max_element(chains.begin(), chains.end());
}

std::vector<std::size_t> maximal_depth_pieces(const LabelledPolyhedron&, const FaceLattice& lattice,
                                              const ExcessDecomposition& decomposition) {
  const auto chains = chain_lengths(lattice, decomposition);
  const std::size_t deepest = chains.empty() ? 0 : *std::max_element(chains.begin(), chains.end());
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < chains.size(); ++a)
    if (chains[a] == deepest) out.push_back(a);
  auto key = [&](std::size_t a) -> const std::vector<std::size_t>& {
    const auto& piece = decomposition.pieces[a];
    return lattice.faces[piece.top ? *piece.top : piece.faces.front()].tight;
  };
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return out;
}

BlowupStep canonical_blowup_step(const LabelledPolyhedron& p, std::optional<std::size_t> piece) {
  const auto lattice = face_lattice(p);
  require_nonempty(lattice);
  const auto d = excess_decomposition(p, lattice);
  const auto chains = chain_lengths(lattice, d);
  if (*std::max_element(chains.begin(), chains.end()) == 0)
    throw Error("no positive-excess piece: the excess function is already constant");

  const auto candidates = maximal_depth_pieces(p, lattice, d);
  std::size_t chosen;
  if (piece) {
    if (*piece >= d.pieces.size()) throw Error("piece index out of range");
    if (std::find(candidates.begin(), candidates.end(), *piece) == candidates.end())
      throw Error("piece is not of maximal depth");
    chosen = *piece;
  } else {
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](std::size_t a) { return d.pieces[a].closure_is_face; });
    if (it == candidates.end()) throw Error("no maximal-depth piece is the closure of a single face");
    chosen = *it;
  }
  const auto& target = d.pieces[chosen];
  if (!target.closure_is_face) throw Error("piece closure is not the closure of a single face");

  const auto& center = lattice.faces[*target.top].tight;
  const std::size_t pieces_before = d.pieces.size();

  Rational eps = 1;
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    const Label added = summed_label(p, center, eps);
    const auto candidate = with_label(p, added);
    const auto here = face_lattice(candidate);
    const auto half = face_lattice(with_label(p, summed_label(p, center, eps / 2)));
    if (!same_combinatorics(here, half)) continue;
    if (excess_decomposition(candidate, here).pieces.size() >= pieces_before) continue;
    return BlowupStep{candidate, added, eps, center, target.excess};
  }
  throw Error("epsilon selection did not stabilize");
}

DesingularizationTrace canonical_desingularization(const LabelledPolyhedron& p, std::size_t max_steps) {
  DesingularizationTrace trace;
  trace.result = p;
  while (depth(trace.result) > 0) {
    if (trace.steps.size() == max_steps) throw Error("desingularization did not terminate");
    auto step = canonical_blowup_step(trace.result);
    trace.result = step.result;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

bool stable_under_halving(const LabelledPolyhedron& p, const DesingularizationTrace& trace) {
  LabelledPolyhedron halved = p;
  for (const auto& step : trace.steps) halved.add(summed_label(halved, step.center, step.epsilon / 2));
  return same_combinatorics(face_lattice(halved), face_lattice(trace.result));
}

ShiftResult shift_desingularization(const LabelledPolyhedron& p, std::span<const Rational> eta) {
  auto shifted = p.shifted(eta);
  if (vertex_representation(shifted).empty()) throw Error("empty shift");
  return ShiftResult{std::move(shifted), RationalVector(eta.begin(), eta.end()), 0};
}

ShiftResult shift_desingularization(const LabelledPolyhedron& p) {
  if (vertex_representation(p).empty()) throw Error("empty polyhedron");
  if (p.size() > kPrimesFrom101.size()) throw Error("too many labels for the automatic shift");
  Rational delta = 1;
  for (int attempt = 0; attempt < 40; ++attempt, delta /= 2) {
    RationalVector eta(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) eta[i] = -delta / kPrimesFrom101[i];
    auto shifted = p.shifted(eta);
    const auto lattice = face_lattice(shifted);
    if (lattice.empty() || !has_constant_excess(shifted, lattice)) continue;
    return ShiftResult{std::move(shifted), std::move(eta), delta};
  }
  throw Error("automatic shift did not reach constant excess");
}

}  // namespace delzant
