#include "delzant/subdivision.hpp"

#include <algorithm>
#include <random>

namespace delzant {

namespace {

std::size_t cell_dim(const FaceLattice& l) { return l.empty() ? 0 : l.faces.front().dim; }

int sign_of_codim(std::size_t codim) { return codim % 2 ? -1 : 1; }

bool contained(const VertexRepresentation& a, const LabelledPolyhedron& b) {
  for (const auto& l : b.labels()) {
    for (const auto& v : a.vertices)
      if (dot(l.normal, v) < l.offset) return false;
    for (const auto& d : a.rays)
      if (dot(l.normal, std::span<const Integer>(d)) < 0) return false;
    for (const auto& d : a.lineality)
      if (dot(l.normal, d) != 0) return false;
  }
  return true;
}

bool is_face_of(const LabelledPolyhedron& q, const VertexRepresentation& q_vrep, const LabelledPolyhedron& cell,
                const FaceLattice& lattice) {
  const auto sample = relative_interior_point(q_vrep);
  if (!sample) return false;
  const auto closed = closed_face(cell, lattice.faces[lattice.locate(cell, *sample)]);
  return contained(q_vrep, closed) && contained(vertex_representation(closed), q);
}

// Points bounding every vertex of every cell, widened by one unit.
std::pair<RationalVector, RationalVector> bounding_box(const Subdivision& s,
                                                       const std::vector<FaceLattice>& lattices) {
  std::vector<RationalVector> vertices;
  for (const auto& l : lattices) vertices.insert(vertices.end(), l.vrep.vertices.begin(), l.vrep.vertices.end());
  RationalVector lo = vertices.empty() ? RationalVector(s.dim) : vertices.front(), hi = lo;
  for (const auto& v : vertices)
    for (std::size_t j = 0; j < s.dim; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  for (std::size_t j = 0; j < s.dim; ++j) {
    lo[j] -= 1;
    hi[j] += 1;
  }
  return {lo, hi};
}

std::vector<RationalVector> face_samples(const std::vector<FaceLattice>& lattices) {
  std::vector<RationalVector> out;
  for (const auto& l : lattices)
    for (const auto& f : l.faces) out.push_back(f.sample);
  return out;
}

bool in_dominant_chamber(std::span<const Rational> x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c >= 0; });
}


}  // namespace

Report validate(const Subdivision& s, CoverRegion region) {
  Report report;
  report.add("cells", std::to_string(s.cells.size()));
  std::vector<FaceLattice> lattices;
  for (const auto& c : s.cells) {
    if (c.dim() != s.dim) throw Error("cell dimension mismatch");
    lattices.push_back(face_lattice(c));
  }

  std::size_t empty = 0, missing = 0, bad_pairs = 0, uncovered = 0;
  for (const auto& l : lattices) empty += l.empty();
  report.check(empty == 0, "nonempty cells", std::to_string(s.cells.size() - empty));

  // A closed face is present when some cell of its dimension has the same
  // point set; the face lattices already carry both vertex descriptions.
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (const auto& f : lattices[i].faces) {
      const auto closed = closed_face(s.cells[i], f);
      const auto closed_vrep = vertex_representation(closed);
      bool found = false;
      for (std::size_t c = 0; c < s.cells.size() && !found; ++c)
        found = cell_dim(lattices[c]) == f.dim && contained(closed_vrep, s.cells[c]) &&
                contained(lattices[c].vrep, closed);
      missing += !found;
    }
  report.check(missing == 0, "faces present", missing ? std::to_string(missing) + " missing" : "");

  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
      const auto q = intersect(s.cells[i], s.cells[j]);
      const auto q_vrep = vertex_representation(q);
      if (q_vrep.empty()) continue;
      if (!is_face_of(q, q_vrep, s.cells[i], lattices[i]) || !is_face_of(q, q_vrep, s.cells[j], lattices[j])) {
        ++bad_pairs;
        report.add("bad intersection", std::to_string(i) + " " + std::to_string(j));
      }
    }
  report.check(bad_pairs == 0, "intersections are common faces",
               bad_pairs ? std::to_string(bad_pairs) + " violations" : "");

  // Grid of 8 points per axis spanning the box, then every face sample.
  auto [lo, hi] = bounding_box(s, lattices);
  std::vector<RationalVector> points;
  std::vector<int> idx(s.dim, 0);
  for (bool more = s.dim > 0; more;) {
    RationalVector x(s.dim);
    for (std::size_t j = 0; j < s.dim; ++j) x[j] = lo[j] + (hi[j] - lo[j]) * Rational(idx[j], 7);
    points.push_back(std::move(x));
    std::size_t j = 0;
    while (j < s.dim && ++idx[j] > 7) idx[j++] = 0;
    more = j < s.dim;
  }
  for (auto& x : face_samples(lattices)) points.push_back(std::move(x));
  std::size_t tested = 0;
  for (const auto& x : points) {
    if (region == CoverRegion::dominant_chamber && !in_dominant_chamber(x)) continue;
    ++tested;
    const bool covered =
        std::any_of(s.cells.begin(), s.cells.end(), [&](const LabelledPolyhedron& c) { return c.contains(x); });
    if (!covered) {
      if (uncovered < 5) report.add("uncovered point", format_vector(x));
      ++uncovered;
    }
  }
  report.check(uncovered == 0, "coverage",
               std::to_string(tested) + " points" + (uncovered ? ", " + std::to_string(uncovered) + " uncovered" : ""));
  return report;
}

bool is_admissible(const Subdivision& s, const LabelledPolyhedron& delta) {
  const auto dl = face_lattice(delta);
  if (dl.empty()) return true;
  if (!dl.vrep.bounded()) throw Error("delta must be bounded");
  // A pair of open faces meets exactly when the intersection of their
  // closures is a face of the cell and delta; its relative interior then lies in both.
  for (const auto& cell : s.cells) {
    const auto cl = face_lattice(cell);
    const auto both = intersect(cell, delta);
    for (const auto& h : face_lattice(both).faces) {
      const auto& f = cl.faces[cl.locate(cell, h.sample)];
      const auto& g = dl.faces[dl.locate(delta, h.sample)];
      std::vector<RationalVector> rows = f.affine_basis;
      rows.insert(rows.end(), g.affine_basis.begin(), g.affine_basis.end());
      if (rows.empty() || rank(RationalMatrix::from_rows(rows, s.dim)) < s.dim) return false;
    }
  }
  return true;
}

Integer euler_sum(const Subdivision& s, std::span<const Rational> point) {
  Integer total = 0;
  for (const auto& c : s.cells)
    if (c.contains(point)) total += sign_of_codim(s.dim - cell_dim(face_lattice(c)));
  return total;
}

Report euler_check(const Subdivision& s, std::size_t samples, std::uint64_t seed) {
  std::vector<FaceLattice> lattices;
  std::vector<int> signs;
  for (const auto& c : s.cells) {
    lattices.push_back(face_lattice(c));
    signs.push_back(sign_of_codim(s.dim - cell_dim(lattices.back())));
  }
  const auto boundary = face_samples(lattices);
  auto [lo, hi] = bounding_box(s, lattices);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(0, 1 << 20);
  std::size_t bad = 0;
  Report report;
  for (std::size_t n = 0; n < samples; ++n) {
    RationalVector x(s.dim);
    if (n % 2 == 1 && !boundary.empty()) {
      x = boundary[static_cast<std::size_t>(rng() % boundary.size())];
    } else {
      for (std::size_t j = 0; j < s.dim; ++j)
        x[j] = lo[j] + (hi[j] - lo[j]) * make_rational(num(rng), 1 << 20);
    }
    Integer total = 0;
    for (std::size_t c = 0; c < s.cells.size(); ++c)
      if (s.cells[c].contains(x)) total += signs[c];
    if (total != 1) {
      if (bad < 5) report.add("euler sum at " + format_vector(x), total.get_str());
      ++bad;
    }
  }
  report.check(bad == 0, "euler identity", std::to_string(samples) + " points" +
                                               (bad ? ", " + std::to_string(bad) + " violations" : ""));
  return report;
}

Report glue_count_check(const LabelledPolyhedron& delta, const Subdivision& s) {
  if (!is_admissible(s, delta)) throw Error("subdivision is not admissible for delta");
  std::vector<IntVector> points;
  for_each_lattice_point(delta, 1, Region::closed, [&](const IntVector& mu) { points.push_back(mu); });

  auto exponent = [](const IntVector& mu) {
    Exponent e;
    for (const auto& x : mu) e.push_back(x.get_si());
    return e;
  };
  LaurentCharacter left(delta.dim()), right(delta.dim());
  for (const auto& mu : points) left.add(exponent(mu), 1);

  Report report;
  Integer signed_count = 0;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const int sign = sign_of_codim(s.dim - cell_dim(face_lattice(s.cells[c])));
    long n = 0;
    for (const auto& mu : points)
      if (s.cells[c].contains(to_rational(mu))) {
        right.add(exponent(mu), sign);
        ++n;
      }
    signed_count += sign * n;
  }
  report.add("points", std::to_string(points.size()));
  report.check(signed_count == static_cast<long>(points.size()), "signed cell count", signed_count.get_str());
  report.check(left == right, "character identity");
  return report;
}

Subdivision hyperplane_split(const IntVector& normal, std::vector<Rational> offsets) {
  if (is_zero(std::span<const Integer>(normal))) throw Error("zero split normal");
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  if (offsets.empty()) throw Error("no split offsets");
  IntVector neg = normal;
  for (auto& x : neg) x = -x;
  Subdivision s{normal.size(), {}};
  const std::size_t n = offsets.size();
  for (std::size_t i = 0; i <= n; ++i) {
    LabelledPolyhedron slab(normal.size());
    if (i > 0) slab.add(Label(normal, offsets[i - 1]));
    if (i < n) slab.add(Label(neg, -offsets[i]));
    s.cells.push_back(slab);
    if (i < n) s.cells.push_back(LabelledPolyhedron(normal.size(), {Label(normal, offsets[i]), Label(neg, -offsets[i])}));
  }
  return s;
}

std::vector<Wall> all_walls(std::size_t k) {
  std::vector<Wall> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Wall w;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) w.support.push_back(j);
    out.push_back(std::move(w));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Wall& a, const Wall& b) { return a.support.size() < b.support.size(); });
  return out;
}

std::optional<std::size_t> DualSubdivision::find(const Wall& sigma, const Wall& tau) const {
  for (std::size_t i = 0; i < walls.size(); ++i)
    if (walls[i].first == sigma && walls[i].second == tau) return i;
  return std::nullopt;
}

namespace {

// lambda + cone(gens) for linearly independent generators.
LabelledPolyhedron simplicial_cone(std::span<const Rational> apex, const std::vector<RationalVector>& gens,
                                   std::size_t k) {
  LabelledPolyhedron out(k);
  auto offset = [&](const IntVector& v) { return dot(std::span<const Integer>(v), apex); };
  const auto normals = gens.empty() ? std::vector<RationalVector>{} : kernel_basis(RationalMatrix::from_rows(gens, k));
  std::vector<RationalVector> basis = gens;
  if (gens.empty())
    for (std::size_t j = 0; j < k; ++j) {
      RationalVector e(k);
      e[j] = 1;
      basis.push_back(e);
    }
  else
    basis.insert(basis.end(), normals.begin(), normals.end());
  if (basis.size() != k || rank(RationalMatrix::from_rows(basis, k)) != k) throw Error("degenerate cell");
  if (!gens.empty()) {
    // Row i of the inverse transpose pairs to delta_ij with the basis.
    const auto dual = inverse(RationalMatrix::from_rows(basis, k)).transpose();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto f = primitive_multiple(dual.row(i));
      out.add(Label(f, offset(f)));
    }
  }
  for (const auto& n : (gens.empty() ? basis : normals)) {
    const auto f = primitive_multiple(n);
    IntVector g = f;
    for (auto& x : g) x = -x;
    out.add(Label(f, offset(f)));
    out.add(Label(g, offset(g)));
  }
  return out;
}

}  // namespace

DualSubdivision dual_subdivision(const RootSystemData& r, std::span<const Rational> lambda) {
  if (lambda.size() != r.k) throw Error("weight dimension mismatch");
  for (const auto& x : lambda)
    if (x <= 0) throw Error("lambda must be strictly dominant");
  DualSubdivision out;
  out.subdivision.dim = r.k;
  const auto walls = all_walls(r.k);
  for (const auto& tau : walls)
    for (const auto& sigma : walls) {
      if (!std::includes(tau.support.begin(), tau.support.end(), sigma.support.begin(), sigma.support.end())) continue;
      std::vector<RationalVector> gens;
      for (std::size_t j = 0; j < r.k; ++j)
        if (!std::binary_search(tau.support.begin(), tau.support.end(), j)) {
          RationalVector g(r.k);
          for (std::size_t c = 0; c < r.k; ++c) g[c] = -r.simple_roots[j][c];
          gens.push_back(std::move(g));
        }
      for (auto i : sigma.support) {
        RationalVector g(r.k);
        g[i] = 1;
        gens.push_back(std::move(g));
      }
      auto cell = simplicial_cone(lambda, gens, r.k);
      const std::size_t codim = tau.support.size() - sigma.support.size();
      if (cell_dim(face_lattice(cell)) != r.k - codim) throw Error("non-generic lambda: degenerate cell");
      out.subdivision.cells.push_back(std::move(cell));
      out.walls.emplace_back(sigma, tau);
    }
  return out;
}

Integer wall_alternating_sum(const DualSubdivision& d, const LabelledPolyhedron& delta, const Wall& tau) {
  Integer total = 0;
  for (std::size_t i = 0; i < d.walls.size(); ++i) {
    const auto& [sigma, t] = d.walls[i];
    if (!(t == tau)) continue;
    if (vertex_representation(intersect(d.subdivision.cells[i], delta)).empty()) continue;
    total += sign_of_codim(tau.support.size() - sigma.support.size());
  }
  return total;
}

Subdivision read_subdivision(std::istream& in, const std::string& source) {
  Subdivision s;
  s.cells = read_lpoly_blocks(in, source);
  if (s.cells.empty()) throw ParseError(source, 1, "empty subdivision");
  s.dim = s.cells.front().dim();
  for (const auto& c : s.cells)
    if (c.dim() != s.dim) throw ParseError(source, 1, "cells of different dimensions");
  return s;
}

void write_subdivision(std::ostream& out, const Subdivision& s) { write_lpoly_blocks(out, s.cells); }

}  // namespace delzant
