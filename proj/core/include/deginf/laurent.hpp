#ifndef DEGINF_LAURENT_HPP
#define DEGINF_LAURENT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "deginf/lattice.hpp"
#include "deginf/rational.hpp"

namespace deginf {

enum class RingMode { Laurent, Polynomial };

/// Which monomial lattice a polynomial lives in: Z^n (Laurent) or N^n.
struct RingDomain {
  std::size_t n = 0;
  RingMode mode = RingMode::Polynomial;

  bool contains(const LatticeVector& e) const {
    return e.dim() == n && (mode == RingMode::Laurent || e.all_nonnegative());
  }
  friend bool operator==(const RingDomain&, const RingDomain&) = default;
};

RingDomain laurent_domain(std::size_t n);
RingDomain polynomial_domain(std::size_t n);

/// Finite map exponent -> nonzero rational coefficient. Terms are kept in
/// graded-lex order so every traversal (printing, hashing) is deterministic.
class LaurentPolynomial {
 public:
  using TermMap = std::map<LatticeVector, Rational, GradedLexLess>;

  explicit LaurentPolynomial(RingDomain domain) : dom_(domain) {}

  static LaurentPolynomial zero(RingDomain domain) { return LaurentPolynomial(domain); }
  static LaurentPolynomial constant(RingDomain domain, const Rational& c);
  static LaurentPolynomial monomial(RingDomain domain, const LatticeVector& exp,
                                    const Rational& coef = Rational(1));

  const RingDomain& domain() const { return dom_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * x^exp, dropping the term if the sum cancels.
  void add_term(const LatticeVector& exp, const Rational& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const Rational& c) const;
  LaurentPolynomial pow(unsigned k) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Text form with graded-lex-descending terms, e.g. "x1^2 - 2/3*x1*x2".
  std::string str() const;

 private:
  void check_exponent(const LatticeVector& e) const;

  RingDomain dom_;
  TermMap terms_;
};

/// Exact product; DomainMismatch unless both factors share a domain.
LaurentPolynomial poly_multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

/// Parses the term syntax "c * x1^a1 * ... * xn^an" joined by +/-.
/// For n <= 3 the aliases x, y, z are accepted. Negative exponents are
/// rejected outside Laurent mode.
LaurentPolynomial parse_polynomial(const std::string& text, RingDomain domain);

}  // namespace deginf

#endif
