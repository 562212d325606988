// Labelled polyhedra: a list of labels (v_i, r_i) cutting out
// P = { mu : <mu, v_i> >= r_i for all i }, its face lattice with tight-label
// sets, the excess function and the orbifold structure data read off it.

#pragma once

#include "delzant/lattice.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace delzant {

struct Label {
  IntVector normal;
  Rational offset;

  Label() = default;
  Label(IntVector v, Rational r);

  /// A label whose vector is a proper integer multiple of a primitive vector.
  bool weighted() const;

  friend bool operator==(const Label&, const Label&) = default;
};

class LabelledPolyhedron {
 public:
  LabelledPolyhedron() = default;
  explicit LabelledPolyhedron(std::size_t dim, std::vector<Label> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_.at(i); }

  void add(Label label);

  bool contains(std::span<const Rational> point) const;

  /// Labels (v_i, t r_i): the dilate tP.
  LabelledPolyhedron dilate(const Rational& t) const;

  /// Labels (v_i, r_i + eta_i).
  LabelledPolyhedron shifted(std::span<const Rational> eta) const;

  friend bool operator==(const LabelledPolyhedron&, const LabelledPolyhedron&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Label> labels_;
};

/// Minkowski-Weyl data: P = conv(vertices) + cone(rays) + span(lineality).
/// Vertices are those of P intersected with the orthogonal complement of
/// the lineality space, so they exist whenever P is nonempty.
struct VertexRepresentation {
  std::vector<RationalVector> vertices;
  std::vector<IntVector> rays;
  std::vector<RationalVector> lineality;

  bool empty() const { return vertices.empty(); }
  bool bounded() const { return rays.empty() && lineality.empty(); }
};

VertexRepresentation vertex_representation(const LabelledPolyhedron& p);

/// An open face, identified by its tight-label set.
struct Face {
  std::vector<std::size_t> tight;  // S_F, sorted label indices
  std::size_t dim = 0;
  std::vector<RationalVector> affine_basis;  // directions spanning the tangent space
  RationalVector sample;                     // a point of the relative interior
  bool is_bounded = true;
  std::vector<std::size_t> vertices;  // indices into VertexRepresentation::vertices
  std::vector<std::size_t> rays;      // indices into VertexRepresentation::rays

  std::size_t codim(std::size_t ambient) const { return ambient - dim; }
};

struct FaceLattice {
  std::size_t ambient = 0;
  VertexRepresentation vrep;
  std::vector<Face> faces;  // sorted by (|tight|, tight); faces[0] is P's relative interior

  bool empty() const { return faces.empty(); }

  /// F_a lies in the closure of F_b.
  bool below(std::size_t a, std::size_t b) const;

  std::optional<std::size_t> find(const std::vector<std::size_t>& tight) const;

  /// Index of the face whose relative interior contains the point.
  std::size_t locate(const LabelledPolyhedron& p, std::span<const Rational> point) const;

  /// Smallest face having both in its closure, and the relative interior of
  /// the intersection of closures (none if the closures are disjoint).
  std::size_t join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

  std::vector<std::size_t> vertex_faces() const;
};

FaceLattice face_lattice(const LabelledPolyhedron& p);

struct FaceLabels {
  std::vector<Label> tight;          // S_F
  LabelledPolyhedron restricted;     // S|_F, cutting out the closed face
};

FaceLabels face_labels(const LabelledPolyhedron& p, const Face& f);

/// The closed face as a labelled polyhedron (the label set S|_F).
LabelledPolyhedron closed_face(const LabelledPolyhedron& p, const Face& f);

std::size_t rank_of_labels(const LabelledPolyhedron& p, const std::vector<std::size_t>& indices);

/// e(F) = |S_F| - codim F, codimension taken in the ambient space.
std::size_t excess(const LabelledPolyhedron& p, const Face& f);

struct ExcessDecomposition {
  struct Piece {
    std::size_t excess = 0;
    std::vector<std::size_t> faces;      // indices into the face lattice
    bool closure_is_face = false;
    std::optional<std::size_t> top;      // the face whose closure is the piece's closure
  };
  std::vector<Piece> pieces;

  /// Piece a lies in the closure of piece b (a != b).
  bool below(const FaceLattice& lattice, std::size_t a, std::size_t b) const;
};

ExcessDecomposition excess_decomposition(const LabelledPolyhedron& p, const FaceLattice& lattice);
ExcessDecomposition excess_decomposition(const LabelledPolyhedron& p);

bool is_simple(const LabelledPolyhedron& p);
bool is_simple(const LabelledPolyhedron& p, const FaceLattice& lattice);
bool is_simply_laced(const LabelledPolyhedron& p);
bool has_constant_excess(const LabelledPolyhedron& p, const FaceLattice& lattice);

/// Drops every label whose hyperplane misses P.
LabelledPolyhedron minimalize(const LabelledPolyhedron& p);

/// Order of the component group of K_F: the product of the elementary
/// divisors of the tight-label matrix. Requires independent tight labels.
Integer structure_group_order(const LabelledPolyhedron& p, const Face& f);

/// Primitive edge directions leaving the vertex face `vertex`.
std::vector<IntVector> edge_directions(const FaceLattice& lattice, std::size_t vertex);

/// Set inclusion and equality of polyhedra, decided exactly from vertex data.
bool is_subset(const LabelledPolyhedron& a, const LabelledPolyhedron& b);
bool same_set(const LabelledPolyhedron& a, const LabelledPolyhedron& b);

/// Polyhedron cut out by the union of both label lists.
LabelledPolyhedron intersect(const LabelledPolyhedron& a, const LabelledPolyhedron& b);

/// Point in the relative interior, if nonempty.
std::optional<RationalVector> relative_interior_point(const VertexRepresentation& v);

/// Minimal labelled polytope whose set is the convex hull of the points.
LabelledPolyhedron convex_hull(const std::vector<RationalVector>& points, std::size_t dim);

/// Same-combinatorics test: identical tight sets with identical dimensions.
bool same_combinatorics(const FaceLattice& a, const FaceLattice& b);

// ---------------------------------------------------------------------------
// .lpoly text format

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

LabelledPolyhedron read_lpoly(std::istream& in, const std::string& source = "<input>");
LabelledPolyhedron parse_lpoly(const std::string& text, const std::string& source = "<input>");
void write_lpoly(std::ostream& out, const LabelledPolyhedron& p);
std::string format_lpoly(const LabelledPolyhedron& p);

/// Blocks of .lpoly separated by lines consisting of "---".
std::vector<LabelledPolyhedron> read_lpoly_blocks(std::istream& in, const std::string& source = "<input>");
void write_lpoly_blocks(std::ostream& out, const std::vector<LabelledPolyhedron>& blocks);

std::string format_label(const Label& l);
std::string format_vector(std::span<const Rational> v, const char* sep = ",");
std::string format_vector(std::span<const Integer> v, const char* sep = ",");

}  // namespace delzant
