// Polyhedral subdivisions of t*: validation, transversality against a
// polytope, the pointwise Euler identity, the lattice-count form of the
// gluing formula, and the dual subdivision around a dominant point.
#pragma once

#include "delzant/report.hpp"
#include "delzant/root_system.hpp"

#include <cstdint>
#include <iosfwd>

namespace delzant {

struct Subdivision {
  std::size_t dim = 0;
  std::vector<LabelledPolyhedron> cells;  // closed cells, possibly unbounded
};

enum class CoverRegion { all_space, dominant_chamber };

/// Face closure, pairwise intersections being common faces, and coverage of
/// the region on a grid of pitch 1/7 of the cells' bounding box together
/// with the relative-interior samples of every cell face.
Report validate(const Subdivision& s, CoverRegion region = CoverRegion::all_space);

/// Every open face of every cell that meets an open face of delta does so
/// transversally: the two tangent spaces span the ambient space.
bool is_admissible(const Subdivision& s, const LabelledPolyhedron& delta);

/// sum over cells containing the point of (-1)^codim.
Integer euler_sum(const Subdivision& s, std::span<const Rational> point);

/// euler_sum == 1 at `samples` seeded points, half of them cell-face samples
/// so boundaries are exercised.
Report euler_check(const Subdivision& s, std::size_t samples, std::uint64_t seed = 0);

/// The lattice points of delta against the signed sum over cells, as counts
/// and as Laurent characters. Throws if s is not admissible for delta.
Report glue_count_check(const LabelledPolyhedron& delta, const Subdivision& s);

/// Slabs and hyperplanes cut by <normal, x> = c for the given offsets.
Subdivision hyperplane_split(const IntVector& normal, std::vector<Rational> offsets);

struct DualSubdivision {
  Subdivision subdivision;
  std::vector<std::pair<Wall, Wall>> walls;  // (sigma, tau) of each cell

  std::optional<std::size_t> find(const Wall& sigma, const Wall& tau) const;
};

/// Cells lambda + cone({-alpha_j : j outside tau} U {lambda_i : i in sigma})
/// for every pair of walls sigma <= tau; codim = |tau| - |sigma|.
/// Requires lambda strictly dominant.
DualSubdivision dual_subdivision(const RootSystemData& r, std::span<const Rational> lambda);

/// sum over sigma <= tau with P_{sigma tau} meeting delta of (-1)^{|tau|-|sigma|}.
Integer wall_alternating_sum(const DualSubdivision& d, const LabelledPolyhedron& delta, const Wall& tau);

/// All walls (support subsets) of a rank-k chamber, smallest first.
std::vector<Wall> all_walls(std::size_t k);

Subdivision read_subdivision(std::istream& in, const std::string& source = "<input>");
void write_subdivision(std::ostream& out, const Subdivision& s);

}  // namespace delzant
