#ifndef DEGINF_JSON_IO_HPP
#define DEGINF_JSON_IO_HPP

#include <string>
#include <variant>

#include "deginf/conjecture.hpp"
#include "deginf/degree.hpp"
#include "deginf/polytope.hpp"
#include "deginf/toric.hpp"

namespace deginf {

/// Any degree-function input the CLI accepts: the three concrete function
/// kinds plus a polytope (evaluated through both of its routes).
using DegreeObject = std::variant<WeightedDegree, Subdegree, GeneratedFiltration, RationalPolytope>;

RingDomain domain_of(const DegreeObject& obj);

/// Evaluator for any descriptor; a polytope evaluates through the scaling
/// route and the facet-subdegree route and insists they match.
DegreeFn evaluator_of(const DegreeObject& obj);

// -- parsing (all throw Error(ParseError/...) on malformed input) -----------

RingDomain parse_domain_json(const std::string& text);
LaurentPolynomial parse_polynomial_json(const std::string& text);
RationalPolytope parse_polytope_json(const std::string& text);
DegreeObject parse_degree_json(const std::string& text);

// -- serialization (deterministic: sorted keys, rationals as strings) -------

std::string domain_to_json(const RingDomain& dom);
std::string polynomial_to_json(const LaurentPolynomial& p);
std::string weighted_to_json(const WeightedDegree& d);
std::string subdegree_to_json(const Subdegree& s);
std::string polytope_to_json(const RationalPolytope& p);
std::string facets_to_json(const std::vector<Facet>& fs);
std::string matrix_to_json(const RationalMatrix& m);
std::string divisor_to_json(const DivisorAtInfinity& d);
std::string intersection_report_to_json(const IntersectionReport& r);
std::string nef_result_to_json(const NefResult& r);
std::string semigroup_to_json(const SemigroupResult& r);
std::string lattice_points_to_json(const std::vector<LatticeVector>& pts);

/// Report JSON; runtime_ms is emitted only on request so reproducibility
/// comparisons can work on the deterministic remainder.
std::string experiment_report_to_json(const ExperimentReport& r, bool include_runtime);

}  // namespace deginf

#endif
