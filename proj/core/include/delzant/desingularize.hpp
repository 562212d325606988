// Canonical and shift desingularization of labelled polyhedra.
//
// The canonical procedure repeatedly picks a closed excess piece of maximal
// depth, whose closure is the closure of one face F, and appends the label
// (sum of v_i over S_F, sum of r_i over S_F + eps). The shift procedure keeps
// the label vectors and perturbs the offsets.
#pragma once

#include "delzant/polyhedron.hpp"

#include <optional>

namespace delzant {

/// Longest strictly ascending chain of excess pieces under closure; a
/// polyhedron with constant excess has depth 0. Throws on empty P.
std::size_t depth(const LabelledPolyhedron& p);

/// Pieces of maximal depth, i.e. the bottoms of longest chains, ordered by
/// the tight set of their top face.
std::vector<std::size_t> maximal_depth_pieces(const LabelledPolyhedron& p, const FaceLattice& lattice,
                                              const ExcessDecomposition& decomposition);

struct BlowupStep {
  LabelledPolyhedron result;
  Label added;
  Rational epsilon;
  std::vector<std::size_t> center;  // S_F of the blown-up face, as label indices of the input
  std::size_t center_excess = 0;
};

/// Blows up the given piece (an index into excess_decomposition(p)), or the
/// canonical choice when `piece` is empty. eps starts at 1 and is halved until
/// the face lattice of the result agrees with the one at eps/2.
BlowupStep canonical_blowup_step(const LabelledPolyhedron& p, std::optional<std::size_t> piece = std::nullopt);

struct DesingularizationTrace {
  std::vector<BlowupStep> steps;
  LabelledPolyhedron result;
};

DesingularizationTrace canonical_desingularization(const LabelledPolyhedron& p, std::size_t max_steps = 64);

/// Replays the trace with every eps halved and compares face lattices.
bool stable_under_halving(const LabelledPolyhedron& p, const DesingularizationTrace& trace);

struct ShiftResult {
  LabelledPolyhedron result;
  RationalVector eta;
  Rational delta;  // scale used in auto mode, 0 for an explicit eta
};

/// Labels (v_i, r_i + eta_i). Throws "empty shift" if the result is empty.
ShiftResult shift_desingularization(const LabelledPolyhedron& p, std::span<const Rational> eta);

/// Automatic shift eta_i = -delta / q_i with q_i the i-th prime from 101 on.
/// The shift moves every facet outward, so P_eta contains P; delta starts at
/// 1 and is halved until the excess function of P_eta is constant.
ShiftResult shift_desingularization(const LabelledPolyhedron& p);

}  // namespace delzant
