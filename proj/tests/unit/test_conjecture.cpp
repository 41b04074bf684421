#include <deginf/conjecture.hpp>
#include <deginf/json_io.hpp>
#include <deginf/rng.hpp>
#include <deginf/toric.hpp>

#include <doctest.h>

using namespace deginf;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.k_min = 1;
  cfg.k_max = 4;
  cfg.entry_bound = 9;
  cfg.trials = 300;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("sample_weight_tuples") {
  ExperimentConfig cfg = small_config();
  SUBCASE("shape and hypotheses hold by construction") {
    for (unsigned long trial = 0; trial < 50; ++trial) {
      auto vs = sample_weight_tuples(cfg, trial);
      CHECK(vs.size() >= cfg.k_min);
      CHECK(vs.size() <= cfg.k_max);
      for (const auto& v : vs) {
        CHECK(v.dim() == cfg.n);
        CHECK(v.all_positive());
        CHECK(v == v.primitive());
      }
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) CHECK(vs[i] != vs[j]);
    }
  }
  SUBCASE("identical (seed, trial) reproduces identical tuples") {
    CHECK(sample_weight_tuples(cfg, 3) == sample_weight_tuples(cfg, 3));
    ExperimentConfig cfg2 = cfg;
    cfg2.seed = 8;
    CHECK(sample_weight_tuples(cfg, 3) != sample_weight_tuples(cfg2, 3));
  }
  SUBCASE("k = 1 configurations always yield the 1x1 identity") {
    ExperimentConfig cfg1 = cfg;
    cfg1.k_min = cfg1.k_max = 1;
    auto vs = sample_weight_tuples(cfg1, 0);
    REQUIRE(vs.size() == 1);
    CHECK(determinant(linking_matrix(vs)) == Rational(1));
  }
}

TEST_CASE("linking_determinant_experiment") {
  ExperimentConfig cfg = small_config();
  SUBCASE("reports are bit-for-bit reproducible modulo runtime") {
    ExperimentReport a = linking_determinant_experiment(cfg);
    ExperimentReport b = linking_determinant_experiment(cfg);
    CHECK(experiment_report_to_json(a, false) == experiment_report_to_json(b, false));
    CHECK(a.trials_executed == cfg.trials);
  }
  SUBCASE("n = 2 sampling finds no counterexamples") {
    ExperimentConfig cfg2 = cfg;
    cfg2.n = 2;
    cfg2.trials = 500;
    ExperimentReport r = linking_determinant_experiment(cfg2);
    CHECK(r.counterexamples.empty());
    CHECK(r.min_abs_det.sign() > 0);
  }
  SUBCASE("min instance recomputes to the reported minimum") {
    ExperimentReport r = linking_determinant_experiment(cfg);
    CHECK(determinant(linking_matrix(r.min_instance.vectors)).abs() == r.min_abs_det);
  }
}

TEST_CASE("exhaustive_n2_check") {
  SUBCASE("B = 5, k <= 3") {
    auto r = exhaustive_n2_check(5, 3);
    CHECK(r.all_invertible);
    CHECK(r.subsets_checked > 0);
    CHECK(r.min_abs_det.sign() > 0);
  }
  SUBCASE("k = 1 subsets have determinant 1") {
    auto r = exhaustive_n2_check(4, 1);
    CHECK(r.all_invertible);
    CHECK(r.min_abs_det == Rational(1));
  }
}

TEST_CASE("scale invariance of the linking determinant") {
  SplitMix64 rng(73);
  for (int iter = 0; iter < 80; ++iter) {
    std::size_t n = 2 + rng.uniform(0, 1);
    std::size_t k = 2 + rng.uniform(0, 2);
    std::vector<RationalVector> vs;
    while (vs.size() < k) {
      RationalVector v;
      for (std::size_t i = 0; i < n; ++i)
        v.push_back(Rational(Integer(static_cast<long>(rng.uniform(1, 9))),
                             Integer(static_cast<long>(rng.uniform(1, 4)))));
      vs.push_back(std::move(v));
    }
    Rational base;
    try {
      base = determinant(linking_matrix(vs));
    } catch (const Error&) {
      continue;  // proportional draw
    }
    std::size_t i = rng.uniform(0, k - 1);
    Rational c(Integer(static_cast<long>(rng.uniform(1, 7))),
               Integer(static_cast<long>(rng.uniform(1, 7))));
    std::vector<RationalVector> scaled = vs;
    scaled[i] = scale(vs[i], c);
    // Row i scales by 1/c and column i by c: the determinant is unchanged.
    CHECK(determinant(linking_matrix(scaled)) == base);
  }
}
