#ifndef DEGINF_DEGREE_HPP
#define DEGINF_DEGREE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deginf/laurent.hpp"

namespace deginf {

/// Value of a degree-like function: a rational, or -infinity at the zero
/// polynomial. Ordering and addition follow the extended conventions
/// (-inf + x = -inf, -inf < x).
class DegreeValue {
 public:
  DegreeValue() : neg_inf_(true) {}
  DegreeValue(Rational r) : neg_inf_(false), v_(std::move(r)) {}  // NOLINT
  static DegreeValue neg_infinity() { return DegreeValue(); }

  bool is_neg_infinity() const { return neg_inf_; }
  const Rational& value() const;

  DegreeValue operator+(const DegreeValue& o) const;
  DegreeValue scaled(const Rational& k) const;  // k * (-inf) = -inf for k > 0

  friend bool operator==(const DegreeValue&, const DegreeValue&) = default;
  bool operator<(const DegreeValue& o) const;
  bool operator<=(const DegreeValue& o) const { return *this < o || *this == o; }

  std::string str() const;  // "-inf" or "p/q"

 private:
  bool neg_inf_;
  Rational v_;
};

DegreeValue max(const DegreeValue& a, const DegreeValue& b);

/// Semidegree given by a weight vector: monomials evaluate to <w, alpha>,
/// polynomials to the maximum over their support.
struct WeightedDegree {
  RingDomain domain;
  RationalVector weight;

  WeightedDegree(RingDomain d, RationalVector w);
};

/// Pointwise maximum of finitely many weighted degrees on a common ring.
struct Subdegree {
  RingDomain domain;
  std::vector<WeightedDegree> parts;

  explicit Subdegree(std::vector<WeightedDegree> ps);
};

/// Filtration spanned by products of weighted generators, evaluated by exact
/// linear algebra inside a finite exponent box. F_d is the span of all
/// generator products of total weight <= d (constants included); evaluation
/// caps are explicit, never silent.
class GeneratedFiltration {
 public:
  struct Generator {
    LaurentPolynomial poly;
    unsigned weight;
  };
  struct Caps {
    unsigned d_max;
    std::vector<std::pair<Integer, Integer>> box;  // inclusive [lo, hi] per axis
  };

  GeneratedFiltration(RingDomain domain, std::vector<Generator> generators, Caps caps);

  const RingDomain& domain() const { return dom_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const Caps& caps() const { return caps_; }

 private:
  RingDomain dom_;
  std::vector<Generator> gens_;
  Caps caps_;

  struct SpanState;
  std::shared_ptr<SpanState> state_;

  friend DegreeValue eval_generated(const GeneratedFiltration&, const LaurentPolynomial&);
};

DegreeValue eval_weighted(const WeightedDegree& d, const LaurentPolynomial& f);
DegreeValue eval_subdegree(const Subdegree& s, const LaurentPolynomial& f);

/// Least d <= D_max with f in F_d. BoxExceeded if supp(f) leaves the box;
/// CapExceeded if no level within the cap contains f.
DegreeValue eval_generated(const GeneratedFiltration& gf, const LaurentPolynomial& f);

/// Any degree-like function, abstracted as its evaluation map.
using DegreeFn = std::function<DegreeValue(const LaurentPolynomial&)>;

DegreeFn evaluator(const WeightedDegree& d);
DegreeFn evaluator(const Subdegree& s);
DegreeFn evaluator(const GeneratedFiltration& gf);

/// Axiom check over sample pairs: delta(K) = 0, the ultrametric-style sum
/// bound (strict drop forces a tie), and submultiplicativity.
struct AxiomViolation {
  enum class Kind { ConstantNotZero, SumBound, SumTieRule, ProductBound };
  Kind kind;
  LaurentPolynomial f, g;
  std::string detail;
};
struct AxiomReport {
  std::size_t checks = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};
AxiomReport check_axioms(const DegreeFn& delta,
                         const std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>>& samples);

/// Tests delta(f^k) = k*delta(f) for k <= k_max; the computable face of the
/// subdegree criterion.
struct HomogeneityResult {
  bool homogeneous;
  unsigned first_failing_k;  // meaningful when !homogeneous
};
HomogeneityResult homogeneity_probe(const DegreeFn& delta, const LaurentPolynomial& f,
                                    unsigned k_max);

/// Unique irredundant presentation: drops a part iff it never strictly beats
/// all others on the domain lattice; output order is lexicographic on weights.
Subdegree minimal_presentation(const Subdegree& s);

/// Limit extraction of the semidegree singled out by a witness with a strict
/// winner: the nonincreasing sequence delta(w^k f) - delta(w^k).
struct ExtractionResult {
  DegreeValue value;
  bool converged;  // stationary over the last 3 steps
};
ExtractionResult extract_semidegree(const Subdegree& s, const LaurentPolynomial& witness,
                                    const LaurentPolynomial& f, unsigned k_cap);

/// Fekete estimate min_{1<=m<=m_cap} delta(f^m)/m of the normalization limit.
/// converged = the minimum repeats at two indices m1 | m2.
struct NormalizationResult {
  DegreeValue value;
  bool converged;
};
NormalizationResult rees_normalize(const DegreeFn& delta, const LaurentPolynomial& f,
                                   unsigned m_cap);

/// Least positive integer e with e*v integral for every listed value.
Integer scale_to_integer(const std::vector<DegreeValue>& values);

/// Component count N or N-1 of the boundary at infinity, per the zero-part
/// rule; requires the subdegree to be non-negative on the domain lattice.
std::size_t components_at_infinity(const Subdegree& s);

/// Divisor at infinity: one component per part of the minimal presentation,
/// with multiplicity d_j = gcd of the positive values of the integer scaling
/// e*delta_j and coefficient 1/d_j.
struct DivisorAtInfinity {
  struct Component {
    std::size_t part_index;  // into the minimal presentation
    Integer multiplicity;
    Rational coefficient;
  };
  Integer scaling_e;
  Subdegree minimal;
  std::vector<Component> components;
};
DivisorAtInfinity divisor_at_infinity(const Subdegree& s);

}  // namespace deginf

#endif
