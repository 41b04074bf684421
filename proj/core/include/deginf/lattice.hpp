#ifndef DEGINF_LATTICE_HPP
#define DEGINF_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <initializer_list>
#include <string>
#include <vector>

#include "deginf/rational.hpp"

namespace deginf {

/// Vector of rationals; used for weights, vertices and constraint rows.
using RationalVector = std::vector<Rational>;

/// Integer exponent vector / primitive normal of fixed dimension >= 1.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : e_(dim, Integer(0)) {}
  LatticeVector(std::initializer_list<long> xs);
  explicit LatticeVector(std::vector<Integer> xs) : e_(std::move(xs)) {}

  std::size_t dim() const { return e_.size(); }
  const Integer& operator[](std::size_t i) const { return e_[i]; }
  Integer& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Integer>& entries() const { return e_; }

  bool is_zero() const;
  bool all_nonnegative() const;
  bool all_positive() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector scaled(const Integer& k) const;

  /// Divides by the gcd of the entries (zero vector stays zero).
  LatticeVector primitive() const;
  Integer content() const;  // gcd of |entries|

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  std::strong_ordering operator<=>(const LatticeVector& o) const;

  std::string str() const;

 private:
  std::vector<Integer> e_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& w, const LatticeVector& a);
Rational dot(const RationalVector& w, const RationalVector& a);

RationalVector rational_vector(const LatticeVector& v);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& v, const Rational& c);
bool is_zero(const RationalVector& v);

/// Graded lexicographic order on exponent vectors: total degree first, then lex.
/// Fixes the serialization order of polynomial terms.
bool graded_lex_less(const LatticeVector& a, const LatticeVector& b);

struct GradedLexLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    return graded_lex_less(a, b);
  }
};

/// Unique primitive integer vector p and scale > 0 with v = scale * p.
struct PrimitiveResult {
  LatticeVector vector;
  Rational scale;
};
PrimitiveResult primitive_vector(const RationalVector& v);

}  // namespace deginf

#endif
