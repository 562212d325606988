#include "delzant/lattice.hpp"

#include <algorithm>
#include <utility>

namespace delzant {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RationalVector to_rational(std::span<const Integer> v) { return RationalVector(v.begin(), v.end()); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

IntVector primitive(std::span<const Integer> v) {
  const Integer g = gcd_of(v);
  if (g == 0) throw Error("zero label vector");
  IntVector out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

IntVector primitive_multiple(std::span<const Rational> v) {
  const Integer l = lcm_of_denominators(v);
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(scaled);
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return row_reduce(copy).size();
}

std::size_t rank(const IntegerMatrix& m) { return rank(to_rational(m)); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    IntVector w = primitive_multiple(v);
    // Sign convention: first nonzero entry positive.
    const auto lead = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0)
      for (auto& x : w) x = -x;
    basis.push_back(to_rational(w));
  }
  return basis;
}

std::vector<RationalVector> kernel_basis(const IntegerMatrix& m) { return kernel_basis(to_rational(m)); }

RationalVector solve(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error("solve: expected a square system");
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) throw Error("solve: singular system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("inverse: matrix not square");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw Error("inverse: singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("determinant: matrix not square");
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Floor division remainder helper: q = floor-ish quotient so that |a - q b| < |b|.
Integer round_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);

  auto add_row = [&](std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t j = 0; j < cols; ++j) d(target, j) += f * d(source, j);
    for (std::size_t j = 0; j < rows; ++j) u(target, j) += f * u(source, j);
  };
  auto add_col = [&](std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t i = 0; i < rows; ++i) d(i, target) += f * d(i, source);
    for (std::size_t i = 0; i < cols; ++i) v(i, target) += f * v(i, source);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs(d(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      if (pi != t) {
        d.swap_rows(pi, t);
        u.swap_rows(pi, t);
      }
      if (pj != t) {
        d.swap_cols(pj, t);
        v.swap_cols(pj, t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        add_row(i, t, -round_quotient(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        add_col(j, t, -round_quotient(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

std::vector<Integer> elementary_divisors(const IntegerMatrix& m) {
  const auto snf = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (snf.diagonal(i, i) != 0) out.push_back(snf.diagonal(i, i));
  return out;
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  auto add_row = [&](std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t j = 0; j < cols; ++j) h(target, j) += f * h(source, j);
    for (std::size_t j = 0; j < rows; ++j) u(target, j) += f * u(source, j);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    h.swap_rows(a, b);
    u.swap_rows(a, b);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c below row r.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == rows) break;
      if (best != r) swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        add_row(i, r, -round_quotient(h(i, c), h(r, c)));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < cols; ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) add_row(i, r, -round_quotient(h(i, c), h(r, c)));
    ++r;
  }
  return {std::move(u), std::move(h)};
}

}  // namespace delzant
