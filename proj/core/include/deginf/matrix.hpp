#ifndef DEGINF_MATRIX_HPP
#define DEGINF_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "deginf/lattice.hpp"
#include "deginf/rational.hpp"

namespace deginf {

/// Dense matrix over the rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;

  bool is_symmetric() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Determinant by Bareiss fraction-free elimination on the denominator-cleared
/// integer matrix. Exact for any square input.
Rational determinant(const RationalMatrix& m);

/// Exact inverse plus determinant; throws Singular when det = 0.
/// Callers wanting to test invertibility first should use determinant().
struct InverseResult {
  RationalMatrix inverse;
  Rational det;
};
InverseResult matrix_invert(const RationalMatrix& m);

/// Independent determinant by Laplace cofactor expansion. Meant as the
/// second algorithm for re-verifying conjecture counterexample candidates;
/// exponential, keep n small.
Rational determinant_cofactor(const RationalMatrix& m);

}  // namespace deginf

#endif
