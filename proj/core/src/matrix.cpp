#include "deginf/matrix.hpp"

#include <ostream>
#include <utility>

namespace deginf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::DomainMismatch, "matrix product shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) fail(Errc::DomainMismatch, "matrix-vector shape mismatch");
  RationalVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    os << "]";
  }
  return os;
}

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the row scaling factors, so det(input) = det(integer) / factor.
std::pair<std::vector<std::vector<Integer>>, Integer> clear_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  Integer factor = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) row_lcm = lcm(row_lcm, m.at(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m.at(i, j).num() * (row_lcm / m.at(i, j).den());
    factor *= row_lcm;
  }
  return {std::move(a), std::move(factor)};
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DomainMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  auto [a, factor] = clear_rows(m);

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer det_int = a[n - 1][n - 1];
  if (sign < 0) det_int = -det_int;
  return Rational(det_int, factor);
}

InverseResult matrix_invert(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DomainMismatch, "inverse of non-square matrix");
  Rational det = determinant(m);
  if (det.is_zero()) fail(Errc::Singular, "matrix is singular");

  const std::size_t n = m.rows();
  // Gauss-Jordan on [m | I] with exact rational pivots.
  RationalMatrix a(m), inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k).is_zero()) ++p;
    if (p == n) fail(Errc::InternalInvariant, "pivot vanished despite nonzero determinant");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rational piv = a.at(k, k).reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(k, j) *= piv;
      inv.at(k, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k).is_zero()) continue;
      Rational f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return {std::move(inv), std::move(det)};
}

Rational determinant_cofactor(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DomainMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  Rational det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Rational term = m.at(0, j) * determinant_cofactor(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace deginf
