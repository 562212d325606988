// Exact integer and rational linear algebra.
//
// Scalars are GMP integers and rationals; every routine here is exact.
// Matrices are small and dense (dimension <= 8 in practice), stored row-major.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace delzant {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds num/den in canonical form; throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p/q" or "n"; throws Error on malformed input.
Rational parse_rational(const std::string& text);

/// "p/q", or "n" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Stacks vectors as rows; every row must have `cols` entries.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, l) * b(l, j);
      }
    return c;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw Error("matrix-vector product: dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);
RationalVector to_rational(std::span<const Integer> v);

// ---------------------------------------------------------------------------
// Vectors

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

Integer gcd_of(std::span<const Integer> v);
Integer lcm_of_denominators(std::span<const Rational> v);

/// v / gcd(v), signs preserved. Throws Error("zero label vector") on v = 0.
IntVector primitive(std::span<const Integer> v);

/// Clears denominators and divides by the content: the primitive integer
/// vector on the ray through v. Throws on v = 0.
IntVector primitive_multiple(std::span<const Rational> v);

bool is_zero(std::span<const Rational> v);
bool is_zero(std::span<const Integer> v);

// ---------------------------------------------------------------------------
// Rank, kernels, solving

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

/// Basis of {x : M x = 0}. Each vector is the primitive integer multiple of
/// the standard RREF basis vector, first nonzero entry positive, returned as
/// rationals.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const IntegerMatrix& m);

/// Unique solution of a square nonsingular system; throws if singular.
RationalVector solve(const RationalMatrix& a, std::span<const Rational> b);

RationalMatrix inverse(const RationalMatrix& a);

Integer determinant(const IntegerMatrix& m);

// ---------------------------------------------------------------------------
// Normal forms

struct SmithForm {
  IntegerMatrix left;      // U, unimodular
  IntegerMatrix diagonal;  // D = U * M * V
  IntegerMatrix right;     // V, unimodular
};

/// Smith normal form by elementary row and column operations with
/// smallest-pivot selection. D has nonnegative diagonal d1 | d2 | ...
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Nonzero diagonal entries of the Smith form.
std::vector<Integer> elementary_divisors(const IntegerMatrix& m);

/// Row-style Hermite normal form H = U * M with U unimodular: echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntegerMatrix transform;
  IntegerMatrix hermite;
};
HermiteForm hermite_normal_form(const IntegerMatrix& m);

}  // namespace delzant
