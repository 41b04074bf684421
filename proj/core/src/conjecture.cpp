#include "deginf/conjecture.hpp"

#include <algorithm>
#include <chrono>

#include "deginf/rng.hpp"
#include "deginf/toric.hpp"

namespace deginf {

void ExperimentConfig::validate() const {
  if (n < 2) fail(Errc::ConfigError, "experiment needs n >= 2");
  if (k_min < 1 || k_max < k_min) fail(Errc::ConfigError, "bad k range");
  if (entry_bound < 1) fail(Errc::ConfigError, "entry bound must be >= 1");
  if (trials < 1) fail(Errc::ConfigError, "trial count must be >= 1");
}

std::vector<LatticeVector> sample_weight_tuples(const ExperimentConfig& cfg, unsigned long trial) {
  cfg.validate();
  SplitMix64 rng = SplitMix64::derived(cfg.seed, trial);
  std::size_t k = (cfg.k_min == cfg.k_max)
                      ? cfg.k_min
                      : static_cast<std::size_t>(rng.uniform(cfg.k_min, cfg.k_max));

  std::vector<LatticeVector> vs;
  unsigned retries = 0;
  while (vs.size() < k) {
    LatticeVector v(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i)
      v[i] = Integer(static_cast<unsigned long>(rng.uniform(1, cfg.entry_bound)));
    v = v.primitive();
    // Primitive positive vectors are proportional iff equal.
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) {
      if (++retries > 10000)
        fail(Errc::ConfigError, "cannot sample pairwise non-proportional vectors; bound too small");
      continue;
    }
    vs.push_back(std::move(v));
  }

  for (const auto& v : vs)
    if (!v.all_positive())
      fail(Errc::InternalInvariant, "sampled vector lost positivity");
  return vs;
}

ExperimentReport linking_determinant_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.config = cfg;
  bool have_min = false;
  for (unsigned long trial = 0; trial < cfg.trials; ++trial) {
    std::vector<LatticeVector> vs = sample_weight_tuples(cfg, trial);
    Rational det = determinant(linking_matrix(vs));
    if (det.is_zero()) {
      // A conjecture-refuting claim must survive two algorithms.
      Rational check = determinant_cofactor(linking_matrix(vs));
      if (!check.is_zero())
        fail(Errc::InternalInvariant, "elimination and cofactor determinants disagree");
      report.counterexamples.push_back({trial, vs});
    }
    Rational a = det.abs();
    if (!have_min || a < report.min_abs_det) {
      report.min_abs_det = a;
      report.min_instance = {trial, std::move(vs)};
      have_min = true;
    }
    ++report.trials_executed;
  }

  auto end = std::chrono::steady_clock::now();
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return report;
}

namespace {

void subsets_rec(const std::vector<LatticeVector>& pool, std::size_t start,
                 std::vector<LatticeVector>& current, std::size_t k_max,
                 ExhaustiveCheckResult& result, bool& have_min) {
  if (!current.empty()) {
    Rational a = determinant(linking_matrix(current)).abs();
    ++result.subsets_checked;
    if (a.is_zero()) result.all_invertible = false;
    if (!have_min || a < result.min_abs_det) {
      result.min_abs_det = a;
      have_min = true;
    }
  }
  if (current.size() == k_max) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    subsets_rec(pool, i + 1, current, k_max, result, have_min);
    current.pop_back();
  }
}

}  // namespace

ExhaustiveCheckResult exhaustive_n2_check(unsigned long bound, std::size_t k_max) {
  if (bound < 1 || k_max < 1) fail(Errc::ConfigError, "bad exhaustive check parameters");

  std::vector<LatticeVector> pool;
  for (unsigned long a = 1; a <= bound; ++a)
    for (unsigned long b = 1; b <= bound; ++b) {
      if (gcd(Integer(a), Integer(b)) != 1) continue;
      LatticeVector v{0, 0};
      v[0] = Integer(a);
      v[1] = Integer(b);
      pool.push_back(std::move(v));
    }

  ExhaustiveCheckResult result{true, 0, Rational(0)};
  bool have_min = false;
  std::vector<LatticeVector> current;
  subsets_rec(pool, 0, current, k_max, result, have_min);
  return result;
}

}  // namespace deginf
