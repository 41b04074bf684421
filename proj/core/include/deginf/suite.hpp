#ifndef DEGINF_SUITE_HPP
#define DEGINF_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "deginf/polytope.hpp"
#include "deginf/rng.hpp"
#include "deginf/toric.hpp"

namespace deginf {

// Seeded instance generators shared by the property suite and the tests.

LaurentPolynomial random_laurent_polynomial(SplitMix64& rng, const RingDomain& dom,
                                            unsigned max_terms = 4, long exp_bound = 4,
                                            long coef_bound = 9);

/// Random full-dimensional rational polytope with the origin strictly inside
/// (n = 2 or 3), built from one point per orthant plus extras.
RationalPolytope random_interior_polytope(SplitMix64& rng, std::size_t n, long bound = 5);

/// Random surface polygon realizing k <= k_max distinct positive primitive
/// normals with entries <= entry_bound, via a convex integer edge chain.
Polygon2 random_polygon2(SplitMix64& rng, std::size_t k_max, unsigned long entry_bound);

std::vector<LatticeVector> random_positive_normals(SplitMix64& rng, std::size_t k,
                                                   unsigned long entry_bound);

/// Feasibility witness monomial exponent for one part of a minimal
/// presentation, scaled so that the extraction sequence stabilizes after one
/// step for any polynomial with exponents bounded by exp_bound: the witness
/// margin over every other part is made larger than the largest possible
/// value spread.
std::optional<LatticeVector> scaled_part_witness(const Subdegree& minimal, std::size_t part,
                                                 long exp_bound);

/// Cross-module property corpus behind the `suite` subcommand.
struct SuiteOptions {
  std::size_t polytopes_2d = 200;
  std::size_t polytopes_3d = 50;
  std::size_t polys_per_polytope = 10;
  std::size_t axiom_pairs = 50;
  std::size_t polygons = 200;
  std::size_t nef_instances = 500;
  std::size_t ampleness_polygons = 100;
  std::uint64_t seed = 20240101;
  std::string mutate;  // test hook: "break-linking" injects a known fault
};

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  bool all_ok() const {
    for (const auto& p : properties)
      if (!p.ok()) return false;
    return true;
  }
};

SuiteReport run_suite(const SuiteOptions& options);

std::string suite_report_to_text(const SuiteReport& report);

}  // namespace deginf

#endif
