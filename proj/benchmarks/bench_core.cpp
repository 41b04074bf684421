#include <benchmark/benchmark.h>

#include <deginf/cone.hpp>
#include <deginf/conjecture.hpp>
#include <deginf/polytope.hpp>
#include <deginf/rng.hpp>
#include <deginf/suite.hpp>
#include <deginf/toric.hpp>

using namespace deginf;

namespace {

LaurentPolynomial random_poly(std::uint64_t seed, unsigned terms) {
  SplitMix64 rng(seed);
  return random_laurent_polynomial(rng, laurent_domain(2), terms, 6, 9);
}

void BM_PolyMultiply(benchmark::State& state) {
  LaurentPolynomial f = random_poly(1, static_cast<unsigned>(state.range(0)));
  LaurentPolynomial g = random_poly(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poly_multiply(f, g));
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(16);

void BM_LinkingDeterminant(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.k_min = cfg.k_max = static_cast<std::size_t>(state.range(0));
  cfg.entry_bound = 9;
  cfg.seed = 42;
  auto vs = sample_weight_tuples(cfg, 0);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(linking_matrix(vs)));
}
BENCHMARK(BM_LinkingDeterminant)->Arg(3)->Arg(5);

void BM_SubdegreeEval(benchmark::State& state) {
  SplitMix64 rng(7);
  RationalPolytope p = random_interior_polytope(rng, 2);
  Subdegree s = subdegree_from_polytope(p);
  LaurentPolynomial f = random_poly(3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(eval_subdegree(s, f));
}
BENCHMARK(BM_SubdegreeEval);

void BM_IntersectionReport(benchmark::State& state) {
  SplitMix64 rng(11);
  Polygon2 polygon = random_polygon2(rng, 6, 20);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_report(polygon));
}
BENCHMARK(BM_IntersectionReport);

void BM_StrictConeFeasible(benchmark::State& state) {
  std::vector<RationalVector> rows = {
      {Rational(1), Rational(-2), Rational(3)},
      {Rational(-1), Rational(5), Rational(-1)},
      {Rational(2), Rational(1), Rational(-4)},
  };
  for (auto _ : state) benchmark::DoNotOptimize(strict_cone_feasible(rows, laurent_domain(3)));
}
BENCHMARK(BM_StrictConeFeasible);

void BM_ExhaustiveCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(exhaustive_n2_check(static_cast<unsigned long>(state.range(0)), 3));
}
BENCHMARK(BM_ExhaustiveCheck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
