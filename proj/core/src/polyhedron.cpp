#include "delzant/polyhedron.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace delzant {

Label::Label(IntVector v, Rational r) : normal(std::move(v)), offset(std::move(r)) {
  if (is_zero(std::span<const Integer>(normal))) throw Error("zero label vector");
}

bool Label::weighted() const { return gcd_of(normal) != 1; }

LabelledPolyhedron::LabelledPolyhedron(std::size_t dim, std::vector<Label> labels) : dim_(dim) {
  for (auto& l : labels) add(std::move(l));
}

void LabelledPolyhedron::add(Label label) {
  if (label.normal.size() != dim_) throw Error("label dimension mismatch");
  if (is_zero(std::span<const Integer>(label.normal))) throw Error("zero label vector");
  labels_.push_back(std::move(label));
}

bool LabelledPolyhedron::contains(std::span<const Rational> point) const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [&](const Label& l) { return dot(l.normal, point) >= l.offset; });
}

LabelledPolyhedron LabelledPolyhedron::dilate(const Rational& t) const {
  LabelledPolyhedron out(dim_);
  for (const auto& l : labels_) out.labels_.push_back(Label(l.normal, l.offset * t));
  return out;
}

LabelledPolyhedron LabelledPolyhedron::shifted(std::span<const Rational> eta) const {
  if (eta.size() != labels_.size()) throw Error("shift vector length must equal the number of labels");
  LabelledPolyhedron out(dim_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out.labels_.push_back(Label(labels_[i].normal, labels_[i].offset + eta[i]));
  return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Row echelon basis grown one vector at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  bool add(const RationalVector& v) {
    RationalVector r = v;
    for (const auto& [row, pivot] : rows_) {
      if (r[pivot] == 0) continue;
      const Rational f = r[pivot];
      for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * row[j];
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && r[pivot] == 0) ++pivot;
    if (pivot == dim_) return false;
    const Rational inv = 1 / r[pivot];
    for (auto& x : r) x *= inv;
    rows_.emplace_back(std::move(r), pivot);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::pair<RationalVector, std::size_t>> rows_;
};

RationalVector normal_of(const Label& l) { return to_rational(l.normal); }

// Enumerates index sets of `target` linearly independent rows.
void independent_subsets(const std::vector<RationalVector>& rows, std::size_t dim, std::size_t target,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const EchelonBasis&)> rec = [&](std::size_t start, const EchelonBasis& basis) {
    if (chosen.size() == target) {
      visit(chosen);
      return;
    }
    const std::size_t need = target - chosen.size();
    for (std::size_t i = start; i + need <= rows.size(); ++i) {
      EchelonBasis next = basis;
      if (!next.add(rows[i])) continue;
      chosen.push_back(i);
      rec(i + 1, next);
      chosen.pop_back();
    }
  };
  rec(0, EchelonBasis(dim));
}

Bits tight_bits(const LabelledPolyhedron& p, const RationalVector& x) {
  Bits b(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (dot(p.label(i).normal, x) == p.label(i).offset) b.set(i);
  return b;
}

Bits zero_bits(const LabelledPolyhedron& p, const IntVector& d) {
  Bits b(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (dot(p.label(i).normal, std::span<const Integer>(d)) == 0) b.set(i);
  return b;
}

std::vector<std::size_t> bits_to_indices(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

VertexRepresentation vertex_representation(const LabelledPolyhedron& p) {
  const std::size_t k = p.dim();
  std::vector<RationalVector> rows;
  rows.reserve(p.size());
  for (const auto& l : p.labels()) rows.push_back(normal_of(l));

  VertexRepresentation out;
  RationalMatrix a(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = rows[i][j];
  out.lineality = kernel_basis(a);
  const std::size_t r = k - out.lineality.size();

  std::set<RationalVector> vertices;
  independent_subsets(rows, k, r, [&](const std::vector<std::size_t>& s) {
    RationalMatrix m(k, k);
    RationalVector rhs(k);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[s[i]][j];
      rhs[i] = p.label(s[i]).offset;
    }
    for (std::size_t l = 0; l < out.lineality.size(); ++l)
      for (std::size_t j = 0; j < k; ++j) m(r + l, j) = out.lineality[l][j];
    RationalVector x = solve(m, rhs);
    if (p.contains(x)) vertices.insert(std::move(x));
  });
  out.vertices.assign(vertices.begin(), vertices.end());
  if (out.vertices.empty() || r == 0) return out;

  std::set<IntVector> rays;
  independent_subsets(rows, k, r - 1, [&](const std::vector<std::size_t>& s) {
    RationalMatrix m(k - 1, k);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[s[i]][j];
    for (std::size_t l = 0; l < out.lineality.size(); ++l)
      for (std::size_t j = 0; j < k; ++j) m(r - 1 + l, j) = out.lineality[l][j];
    const auto ker = kernel_basis(m);
    IntVector d = primitive_multiple(ker.at(0));
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& l : p.labels())
        if (sign * dot(l.normal, std::span<const Integer>(d)) < 0) {
          ok = false;
          break;
        }
      if (ok) {
        IntVector e = d;
        if (sign < 0)
          for (auto& x : e) x = -x;
        rays.insert(std::move(e));
        break;
      }
    }
  });
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

std::size_t rank_of_labels(const LabelledPolyhedron& p, const std::vector<std::size_t>& indices) {
  RationalMatrix m(indices.size(), p.dim());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) m(i, j) = p.label(indices[i]).normal[j];
  return rank(m);
}

FaceLattice face_lattice(const LabelledPolyhedron& p) {
  FaceLattice lattice;
  lattice.ambient = p.dim();
  lattice.vrep = vertex_representation(p);
  const auto& vrep = lattice.vrep;
  if (vrep.empty()) return lattice;

  const std::size_t n = p.size();
  std::vector<Bits> vertex_tight;
  for (const auto& v : vrep.vertices) vertex_tight.push_back(tight_bits(p, v));
  std::vector<Bits> ray_zero;
  for (const auto& d : vrep.rays) ray_zero.push_back(zero_bits(p, d));

  struct Closure {
    Bits tight;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> rays;
  };
  auto closure = [&](const Bits& t) -> std::optional<Closure> {
    Closure c{Bits(n), {}, {}};
    c.tight.set();
    for (std::size_t v = 0; v < vertex_tight.size(); ++v)
      if (t.is_subset_of(vertex_tight[v])) {
        c.vertices.push_back(v);
        c.tight &= vertex_tight[v];
      }
    if (c.vertices.empty()) return std::nullopt;
    for (std::size_t d = 0; d < ray_zero.size(); ++d)
      if (t.is_subset_of(ray_zero[d])) {
        c.rays.push_back(d);
        c.tight &= ray_zero[d];
      }
    return c;
  };

  // Ordered by size then lexicographically, so the relative interior of P comes first.
  auto by_size = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::map<std::vector<std::size_t>, Closure, decltype(by_size)> found(by_size);
  std::vector<Bits> queue;
  if (auto top = closure(Bits(n))) {
    queue.push_back(top->tight);
    found.emplace(bits_to_indices(top->tight), std::move(*top));
  }
  while (!queue.empty()) {
    Bits t = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      if (t.test(i)) continue;
      Bits next = t;
      next.set(i);
      auto c = closure(next);
      if (!c) continue;
      auto key = bits_to_indices(c->tight);
      if (found.count(key)) continue;
      queue.push_back(c->tight);
      found.emplace(std::move(key), std::move(*c));
    }
  }

  for (auto& [tight, c] : found) {
    Face f;
    f.tight = tight;
    f.vertices = std::move(c.vertices);
    f.rays = std::move(c.rays);
    RationalMatrix a(tight.size(), p.dim());
    for (std::size_t i = 0; i < tight.size(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j) a(i, j) = p.label(tight[i]).normal[j];
    f.affine_basis = kernel_basis(a);
    f.dim = f.affine_basis.size();
    f.is_bounded = f.rays.empty() && vrep.lineality.empty();
    RationalVector s(p.dim());
    for (auto v : f.vertices)
      for (std::size_t j = 0; j < p.dim(); ++j) s[j] += vrep.vertices[v][j];
    for (auto& x : s) x /= static_cast<long>(f.vertices.size());
    for (auto d : f.rays)
      for (std::size_t j = 0; j < p.dim(); ++j) s[j] += vrep.rays[d][j];
    f.sample = std::move(s);
    lattice.faces.push_back(std::move(f));
  }
  return lattice;
}

bool FaceLattice::below(std::size_t a, std::size_t b) const {
  const auto& ta = faces.at(a).tight;
  const auto& tb = faces.at(b).tight;
  return std::includes(ta.begin(), ta.end(), tb.begin(), tb.end());
}

std::optional<std::size_t> FaceLattice::find(const std::vector<std::size_t>& tight) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), tight, [](const Face& f, const std::vector<std::size_t>& t) {
    return f.tight.size() != t.size() ? f.tight.size() < t.size() : f.tight < t;
  });
  if (it == faces.end() || it->tight != tight) return std::nullopt;
  return static_cast<std::size_t>(it - faces.begin());
}

std::size_t FaceLattice::locate(const LabelledPolyhedron& p, std::span<const Rational> point) const {
  if (!p.contains(point)) throw Error("point does not lie in the polyhedron");
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (dot(p.label(i).normal, point) == p.label(i).offset) tight.push_back(i);
  auto f = find(tight);
  if (!f) throw Error("inconsistent face lattice");
  return *f;
}

std::size_t FaceLattice::join(std::size_t a, std::size_t b) const {
  // The largest tight set contained in both: minimal closed superset of the generators.
  std::size_t best = 0;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (below(a, f) && below(b, f) && below(f, best)) best = f;
  return best;
}

std::optional<std::size_t> FaceLattice::meet(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (below(f, a) && below(f, b) && (!best || below(*best, f))) best = f;
  return best;
}

std::vector<std::size_t> FaceLattice::vertex_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (faces[f].dim == 0) out.push_back(f);
  return out;
}

FaceLabels face_labels(const LabelledPolyhedron& p, const Face& f) {
  FaceLabels out;
  for (auto i : f.tight) out.tight.push_back(p.label(i));
  out.restricted = closed_face(p, f);
  return out;
}

LabelledPolyhedron closed_face(const LabelledPolyhedron& p, const Face& f) {
  LabelledPolyhedron out = p;
  for (auto i : f.tight) {
    IntVector neg = p.label(i).normal;
    for (auto& x : neg) x = -x;
    out.add(Label(std::move(neg), -p.label(i).offset));
  }
  return out;
}

std::size_t excess(const LabelledPolyhedron& p, const Face& f) {
  return f.tight.size() - rank_of_labels(p, f.tight);
}

bool ExcessDecomposition::below(const FaceLattice& lattice, std::size_t a, std::size_t b) const {
  if (a == b) return false;
  for (auto fa : pieces.at(a).faces) {
    bool covered = false;
    for (auto fb : pieces.at(b).faces)
      if (lattice.below(fa, fb)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

ExcessDecomposition excess_decomposition(const LabelledPolyhedron& p, const FaceLattice& lattice) {
  const std::size_t n = lattice.faces.size();
  std::vector<std::size_t> e(n);
  for (std::size_t f = 0; f < n; ++f) e[f] = excess(p, lattice.faces[f]);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (e[a] == e[b] && (lattice.below(a, b) || lattice.below(b, a))) parent[root(a)] = root(b);

  std::map<std::size_t, std::size_t> piece_of_root;
  ExcessDecomposition out;
  for (std::size_t f = 0; f < n; ++f) {
    auto [it, inserted] = piece_of_root.try_emplace(root(f), out.pieces.size());
    if (inserted) {
      out.pieces.emplace_back();
      out.pieces.back().excess = e[f];
    }
    out.pieces[it->second].faces.push_back(f);
  }
  for (auto& piece : out.pieces) {
    for (auto candidate : piece.faces) {
      bool dominates = std::all_of(piece.faces.begin(), piece.faces.end(),
                                   [&](std::size_t f) { return lattice.below(f, candidate); });
      if (dominates) {
        piece.closure_is_face = true;
        piece.top = candidate;
        break;
      }
    }
  }
  return out;
}

ExcessDecomposition excess_decomposition(const LabelledPolyhedron& p) {
  return excess_decomposition(p, face_lattice(p));
}

bool is_simple(const LabelledPolyhedron& p, const FaceLattice& lattice) {
  return std::all_of(lattice.faces.begin(), lattice.faces.end(),
                     [&](const Face& f) { return excess(p, f) == 0; });
}

bool is_simple(const LabelledPolyhedron& p) { return is_simple(p, face_lattice(p)); }

bool has_constant_excess(const LabelledPolyhedron& p, const FaceLattice& lattice) {
  if (lattice.faces.empty()) return true;
  const std::size_t e0 = excess(p, lattice.faces.front());
  return std::all_of(lattice.faces.begin(), lattice.faces.end(),
                     [&](const Face& f) { return excess(p, f) == e0; });
}

namespace {

IntegerMatrix tight_matrix(const LabelledPolyhedron& p, const Face& f) {
  IntegerMatrix m(f.tight.size(), p.dim());
  for (std::size_t i = 0; i < f.tight.size(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) m(i, j) = p.label(f.tight[i]).normal[j];
  return m;
}

}  // namespace

bool is_simply_laced(const LabelledPolyhedron& p) {
  const auto lattice = face_lattice(p);
  for (const auto& f : lattice.faces) {
    if (f.tight.empty()) continue;
    const auto divisors = elementary_divisors(tight_matrix(p, f));
    if (divisors.size() != f.tight.size() || divisors.size() != f.codim(p.dim())) return false;
    if (!std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; })) return false;
  }
  return true;
}

LabelledPolyhedron minimalize(const LabelledPolyhedron& p) {
  const auto vrep = vertex_representation(p);
  if (vrep.empty()) return p;
  LabelledPolyhedron out(p.dim());
  for (const auto& l : p.labels()) {
    const bool touches = std::any_of(vrep.vertices.begin(), vrep.vertices.end(),
                                     [&](const RationalVector& v) { return dot(l.normal, v) == l.offset; });
    if (touches) out.add(l);
  }
  return out;
}

Integer structure_group_order(const LabelledPolyhedron& p, const Face& f) {
  if (f.tight.empty()) return 1;
  const auto divisors = elementary_divisors(tight_matrix(p, f));
  if (divisors.size() != f.tight.size()) throw Error("positive-dimensional kernel at face");
  Integer order = 1;
  for (const auto& d : divisors) order *= d;
  return order;
}

std::vector<IntVector> edge_directions(const FaceLattice& lattice, std::size_t vertex) {
  const Face& v = lattice.faces.at(vertex);
  if (v.dim != 0) throw Error("edge_directions: face is not a vertex");
  const RationalVector& here = lattice.vrep.vertices.at(v.vertices.at(0));
  std::vector<IntVector> out;
  for (std::size_t e = 0; e < lattice.faces.size(); ++e) {
    const Face& edge = lattice.faces[e];
    if (edge.dim != 1 || !lattice.below(vertex, e)) continue;
    if (!edge.rays.empty()) {
      out.push_back(lattice.vrep.rays.at(edge.rays.at(0)));
      continue;
    }
    for (auto w : edge.vertices) {
      if (w == v.vertices[0]) continue;
      RationalVector d(here.size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = lattice.vrep.vertices[w][j] - here[j];
      out.push_back(primitive_multiple(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subset(const LabelledPolyhedron& a, const LabelledPolyhedron& b) {
  if (a.dim() != b.dim()) throw Error("dimension mismatch");
  const auto vrep = vertex_representation(a);
  if (vrep.empty()) return true;
  for (const auto& l : b.labels()) {
    for (const auto& v : vrep.vertices)
      if (dot(l.normal, v) < l.offset) return false;
    for (const auto& d : vrep.rays)
      if (dot(l.normal, std::span<const Integer>(d)) < 0) return false;
    for (const auto& d : vrep.lineality)
      if (dot(l.normal, d) != 0) return false;
  }
  return true;
}

bool same_set(const LabelledPolyhedron& a, const LabelledPolyhedron& b) {
  return is_subset(a, b) && is_subset(b, a);
}

LabelledPolyhedron intersect(const LabelledPolyhedron& a, const LabelledPolyhedron& b) {
  if (a.dim() != b.dim()) throw Error("dimension mismatch");
  LabelledPolyhedron out = a;
  for (const auto& l : b.labels()) out.add(l);
  return out;
}

std::optional<RationalVector> relative_interior_point(const VertexRepresentation& v) {
  if (v.empty()) return std::nullopt;
  const std::size_t k = v.vertices.front().size();
  RationalVector s(k);
  for (const auto& x : v.vertices)
    for (std::size_t j = 0; j < k; ++j) s[j] += x[j];
  for (auto& x : s) x /= static_cast<long>(v.vertices.size());
  for (const auto& d : v.rays)
    for (std::size_t j = 0; j < k; ++j) s[j] += d[j];
  return s;
}

LabelledPolyhedron convex_hull(const std::vector<RationalVector>& input, std::size_t dim) {
  if (input.empty()) throw Error("convex hull of an empty point set");
  std::vector<RationalVector> points;
  {
    std::set<RationalVector> unique(input.begin(), input.end());
    points.assign(unique.begin(), unique.end());
  }
  for (const auto& p : points)
    if (p.size() != dim) throw Error("point dimension mismatch");
  const RationalVector& base = points.front();

  RationalMatrix diffs(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = points[i][j] - base[j];
  RationalMatrix echelon = diffs;
  const std::size_t hull_dim = row_reduce(echelon).size();
  std::vector<RationalVector> directions;
  for (std::size_t i = 0; i < hull_dim; ++i) directions.push_back(echelon.row(i));

  std::set<std::pair<IntVector, Rational>> labels;
  // Equations of the affine hull.
  RationalMatrix dir_matrix(hull_dim, dim);
  for (std::size_t i = 0; i < hull_dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) dir_matrix(i, j) = directions[i][j];
  for (const auto& n : kernel_basis(dir_matrix)) {
    IntVector v = primitive_multiple(n);
    const Rational r = dot(v, std::span<const Rational>(base));
    labels.emplace(v, r);
    for (auto& x : v) x = -x;
    labels.emplace(std::move(v), -r);
  }
  // Facets inside the affine hull, one per supporting hyperplane.
  if (hull_dim > 0) {
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (chosen.size() == hull_dim) {
        RationalMatrix m(hull_dim - 1, hull_dim);
        for (std::size_t i = 1; i < hull_dim; ++i)
          for (std::size_t j = 0; j < hull_dim; ++j) {
            RationalVector d(dim);
            for (std::size_t c = 0; c < dim; ++c) d[c] = points[chosen[i]][c] - points[chosen[0]][c];
            m(i - 1, j) = dot(directions[j], d);
          }
        const auto ker = kernel_basis(m);
        if (ker.size() != 1) return;
        RationalVector normal(dim);
        for (std::size_t j = 0; j < hull_dim; ++j)
          for (std::size_t c = 0; c < dim; ++c) normal[c] += ker[0][j] * directions[j][c];
        IntVector v = primitive_multiple(normal);
        const Rational r = dot(v, std::span<const Rational>(points[chosen[0]]));
        bool above = true, below = true;
        for (const auto& p : points) {
          const Rational s = dot(v, std::span<const Rational>(p));
          if (s < r) above = false;
          if (s > r) below = false;
        }
        if (above) labels.emplace(v, r);
        if (below) {
          for (auto& x : v) x = -x;
          labels.emplace(std::move(v), -r);
        }
        return;
      }
      for (std::size_t i = start; i < points.size(); ++i) {
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  LabelledPolyhedron out(dim);
  for (const auto& [v, r] : labels) out.add(Label(v, r));
  return out;
}

bool same_combinatorics(const FaceLattice& a, const FaceLattice& b) {
  if (a.faces.size() != b.faces.size()) return false;
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    if (a.faces[i].tight != b.faces[i].tight) return false;
    if (a.faces[i].dim != b.faces[i].dim) return false;
    if (a.faces[i].is_bounded != b.faces[i].is_bounded) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// I/O

ParseError::ParseError(std::string source, std::size_t line, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line) {}

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct BlockParser {
  std::string source;
  std::optional<LabelledPolyhedron> current;

  void feed(const std::string& text, std::size_t line_no) {
    std::istringstream words(text);
    std::string keyword;
    words >> keyword;
    if (keyword == "dim") {
      if (current) throw ParseError(source, line_no, "duplicate 'dim' line");
      std::string k;
      std::string extra;
      if (!(words >> k) || (words >> extra)) throw ParseError(source, line_no, "expected 'dim <k>'");
      try {
        const Integer dim = parse_rational(k).get_num();
        if (parse_rational(k).get_den() != 1 || dim < 0 || dim > 64) throw Error("bad dimension");
        current.emplace(dim.get_ui());
      } catch (const Error&) {
        throw ParseError(source, line_no, "invalid dimension '" + k + "'");
      }
      return;
    }
    if (keyword == "label") {
      if (!current) throw ParseError(source, line_no, "'label' before 'dim'");
      IntVector v;
      std::string tok;
      bool saw_separator = false;
      while (words >> tok) {
        if (tok == ";") {
          saw_separator = true;
          break;
        }
        try {
          const Rational q = parse_rational(tok);
          if (q.get_den() != 1) throw Error("non-integer");
          v.push_back(q.get_num());
        } catch (const Error&) {
          throw ParseError(source, line_no, "label vector entry '" + tok + "' is not an integer");
        }
      }
      if (!saw_separator) throw ParseError(source, line_no, "missing ';' in label");
      std::string r_text, extra;
      if (!(words >> r_text) || (words >> extra)) throw ParseError(source, line_no, "expected one offset after ';'");
      if (v.size() != current->dim())
        throw ParseError(source, line_no,
                         "label has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(current->dim()));
      try {
        current->add(Label(std::move(v), parse_rational(r_text)));
      } catch (const Error& e) {
        throw ParseError(source, line_no, e.what());
      }
      return;
    }
    throw ParseError(source, line_no, "unknown keyword '" + keyword + "'");
  }

  LabelledPolyhedron finish(std::size_t line_no) {
    if (!current) throw ParseError(source, line_no, "missing 'dim' line");
    LabelledPolyhedron out = std::move(*current);
    current.reset();
    return out;
  }
};

}  // namespace

LabelledPolyhedron read_lpoly(std::istream& in, const std::string& source) {
  BlockParser parser{source, std::nullopt};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip_comment(line);
    if (text.empty()) continue;
    parser.feed(text, line_no);
  }
  return parser.finish(line_no == 0 ? 1 : line_no);
}

LabelledPolyhedron parse_lpoly(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return read_lpoly(in, source);
}

std::string format_label(const Label& l) {
  std::string s = "label";
  for (const auto& x : l.normal) s += " " + x.get_str();
  s += " ; " + to_string(l.offset);
  return s;
}

void write_lpoly(std::ostream& out, const LabelledPolyhedron& p) {
  out << "dim " << p.dim() << '\n';
  for (const auto& l : p.labels()) out << format_label(l) << '\n';
}

std::string format_lpoly(const LabelledPolyhedron& p) {
  std::ostringstream out;
  write_lpoly(out, p);
  return out.str();
}

std::vector<LabelledPolyhedron> read_lpoly_blocks(std::istream& in, const std::string& source) {
  std::vector<LabelledPolyhedron> blocks;
  BlockParser parser{source, std::nullopt};
  std::string line;
  std::size_t line_no = 0;
  bool pending = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip_comment(line);
    if (text.empty()) continue;
    if (text == "---") {
      if (!pending) throw ParseError(source, line_no, "empty block before '---'");
      blocks.push_back(parser.finish(line_no));
      pending = false;
      continue;
    }
    parser.feed(text, line_no);
    pending = true;
  }
  if (pending) blocks.push_back(parser.finish(line_no));
  return blocks;
}

void write_lpoly_blocks(std::ostream& out, const std::vector<LabelledPolyhedron>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out << "---\n";
    write_lpoly(out, blocks[i]);
  }
}

std::string format_vector(std::span<const Rational> v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

std::string format_vector(std::span<const Integer> v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

}  // namespace delzant
