#ifndef DEGINF_CONJECTURE_HPP
#define DEGINF_CONJECTURE_HPP

#include <cstdint>
#include <vector>

#include "deginf/lattice.hpp"
#include "deginf/matrix.hpp"

namespace deginf {

/// Seeded randomized search for singular max-ratio matrices. Never claims the
/// invertibility conjecture, only reports; a reported zero determinant must
/// survive an independent recomputation before it lands in the report.
struct ExperimentConfig {
  std::size_t n = 3;
  std::size_t k_min = 1;
  std::size_t k_max = 5;
  unsigned long entry_bound = 9;
  unsigned long trials = 10000;
  std::uint64_t seed = 42;

  void validate() const;
};

struct WeightTupleInstance {
  unsigned long trial;
  std::vector<LatticeVector> vectors;
};

/// Deterministic function of (seed, trial): k in [k_min, k_max], entries
/// uniform in [1, B], rejection-resampled to pairwise non-proportional and
/// reduced to primitive form.
std::vector<LatticeVector> sample_weight_tuples(const ExperimentConfig& cfg, unsigned long trial);

struct ExperimentReport {
  ExperimentConfig config;
  unsigned long trials_executed = 0;
  std::vector<WeightTupleInstance> counterexamples;  // det = 0, re-verified
  Rational min_abs_det;
  WeightTupleInstance min_instance;
  long long runtime_ms = 0;  // excluded from the reproducibility contract
};

ExperimentReport linking_determinant_experiment(const ExperimentConfig& cfg);

/// Exhaustive n = 2 verification: every k-subset (k <= k_max) of the primitive
/// positive vectors with entries <= bound has an invertible max-ratio matrix.
struct ExhaustiveCheckResult {
  bool all_invertible;
  unsigned long long subsets_checked;
  Rational min_abs_det;
};
ExhaustiveCheckResult exhaustive_n2_check(unsigned long bound, std::size_t k_max);

}  // namespace deginf

#endif
