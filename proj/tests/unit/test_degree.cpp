#include <deginf/cone.hpp>
#include <deginf/degree.hpp>
#include <deginf/rng.hpp>
#include <deginf/suite.hpp>

#include <doctest.h>

#include <thread>

#include "oracles.hpp"

using namespace deginf;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

RingDomain dom2 = polynomial_domain(2);

WeightedDegree figure1_part1() { return WeightedDegree(dom2, {q(1, 3), q(1, 2)}); }
WeightedDegree figure1_part2() { return WeightedDegree(dom2, {q(1, 2), q(1, 3)}); }
Subdegree figure1() { return Subdegree({figure1_part1(), figure1_part2()}); }

// The iterated filtration: generators x1^2 - x2^3 (weight 1), x2 (2), x1 (3).
GeneratedFiltration iterated_filtration(unsigned d_max = 12, long box_hi = 10) {
  std::vector<GeneratedFiltration::Generator> gens = {
      {parse_polynomial("x1^2 - x2^3", dom2), 1},
      {parse_polynomial("x2", dom2), 2},
      {parse_polynomial("x1", dom2), 3},
  };
  GeneratedFiltration::Caps caps{d_max, {{Integer(0), Integer(box_hi)},
                                         {Integer(0), Integer(box_hi)}}};
  return GeneratedFiltration(dom2, std::move(gens), std::move(caps));
}

// K[x] filtration generated by (x, 1) and (x^2, 1).
GeneratedFiltration xx2_filtration(unsigned d_max = 12, long box_hi = 24) {
  RingDomain dom1 = polynomial_domain(1);
  std::vector<GeneratedFiltration::Generator> gens = {
      {parse_polynomial("x", dom1), 1},
      {parse_polynomial("x^2", dom1), 1},
  };
  GeneratedFiltration::Caps caps{d_max, {{Integer(0), Integer(box_hi)}}};
  return GeneratedFiltration(dom1, std::move(gens), std::move(caps));
}

}  // namespace

TEST_CASE("eval_weighted") {
  CHECK(eval_weighted(figure1_part1(), parse_polynomial("x", dom2)) == DegreeValue(q(1, 3)));
  CHECK(eval_weighted(WeightedDegree(dom2, {q(1), q(2)}), parse_polynomial("x^3 + y^2", dom2)) ==
        DegreeValue(q(4)));
  CHECK(eval_weighted(figure1_part2(), parse_polynomial("7", dom2)) == DegreeValue(q(0)));
  CHECK(eval_weighted(figure1_part1(), LaurentPolynomial::zero(dom2)).is_neg_infinity());
}

TEST_CASE("eval_subdegree reproduces the two-triangle picture") {
  Subdegree s = figure1();
  CHECK(eval_subdegree(s, parse_polynomial("x*y", dom2)) == DegreeValue(q(5, 6)));
  CHECK(eval_subdegree(s, parse_polynomial("x", dom2)) == DegreeValue(q(1, 2)));
  CHECK(eval_subdegree(s, parse_polynomial("y", dom2)) == DegreeValue(q(1, 2)));
  Subdegree single({figure1_part1()});
  LaurentPolynomial f = parse_polynomial("x^2*y - 3*x", dom2);
  CHECK(eval_subdegree(single, f) == eval_weighted(figure1_part1(), f));
}

TEST_CASE("eval_generated") {
  SUBCASE("iterated filtration values") {
    GeneratedFiltration gf = iterated_filtration();
    CHECK(eval_generated(gf, parse_polynomial("x1", dom2)) == DegreeValue(q(3)));
    CHECK(eval_generated(gf, parse_polynomial("x2", dom2)) == DegreeValue(q(2)));
    CHECK(eval_generated(gf, parse_polynomial("x1^2 - x2^3", dom2)) == DegreeValue(q(1)));
    CHECK(eval_generated(gf, parse_polynomial("1", dom2)) == DegreeValue(q(0)));
    CHECK(eval_generated(gf, LaurentPolynomial::zero(dom2)).is_neg_infinity());
    // Brute-force oracle agreement on a handful of small inputs.
    std::vector<std::pair<LaurentPolynomial, unsigned>> gens = {
        {parse_polynomial("x1^2 - x2^3", dom2), 1},
        {parse_polynomial("x2", dom2), 2},
        {parse_polynomial("x1", dom2), 3}};
    for (const char* text : {"x1", "x2", "x1^2 - x2^3", "x1*x2", "x1^2"}) {
      LaurentPolynomial f = parse_polynomial(text, dom2);
      auto expected = oracles::filtration_level_brute(gens, f, 8);
      REQUIRE(expected.has_value());
      CHECK(eval_generated(gf, f) == DegreeValue(q(static_cast<long>(*expected))));
    }
  }
  SUBCASE("x^3 lands in F_2 of the (x,1),(x^2,1) filtration") {
    GeneratedFiltration gf = xx2_filtration();
    RingDomain dom1 = polynomial_domain(1);
    std::vector<std::pair<LaurentPolynomial, unsigned>> gens = {
        {parse_polynomial("x", dom1), 1}, {parse_polynomial("x^2", dom1), 1}};
    auto expected = oracles::filtration_level_brute(gens, parse_polynomial("x^3", dom1), 6);
    REQUIRE(expected == 2);
    CHECK(eval_generated(gf, parse_polynomial("x^3", dom1)) == DegreeValue(q(2)));
  }
  SUBCASE("the iterated filtration behaves multiplicatively") {
    // delta(x1^2) = delta(x2^3) = 6 while delta(x1^2 - x2^3) = 1: the strict
    // drop in the sum bound happens exactly at a tie, and powers scale.
    GeneratedFiltration gf = iterated_filtration();
    CHECK(eval_generated(gf, parse_polynomial("x1^2", dom2)) == DegreeValue(q(6)));
    CHECK(eval_generated(gf, parse_polynomial("x2^3", dom2)) == DegreeValue(q(6)));
    CHECK(homogeneity_probe(evaluator(gf), parse_polynomial("x1", dom2), 3).homogeneous);
    CHECK(homogeneity_probe(evaluator(gf), parse_polynomial("x2", dom2), 5).homogeneous);
    CHECK(homogeneity_probe(evaluator(gf), parse_polynomial("x1^2 - x2^3", dom2), 3).homogeneous);
  }
  SUBCASE("an out-of-box intermediate product can re-enter the box") {
    // (x^3 + x) * x^-1 = x^2 + 1 fits the box even though x^3 + x does not.
    RingDomain ldom = laurent_domain(1);
    std::vector<GeneratedFiltration::Generator> gens = {
        {parse_polynomial("x^3 + x", ldom), 1}, {parse_polynomial("x^-1", ldom), 1}};
    GeneratedFiltration gf(ldom, std::move(gens), {4, {{Integer(0), Integer(2)}}});
    CHECK(eval_generated(gf, parse_polynomial("x^2 + 1", ldom)) == DegreeValue(q(2)));
  }
  SUBCASE("caps surface as errors, not verdicts") {
    GeneratedFiltration gf = iterated_filtration(2, 4);
    CHECK_THROWS_WITH_AS(static_cast<void>(eval_generated(gf, parse_polynomial("x1", dom2))),
                         doctest::Contains("CapExceeded"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(eval_generated(gf, parse_polynomial("x1^9", dom2))),
                         doctest::Contains("BoxExceeded"), Error);
  }
}

TEST_CASE("concurrent filtration evaluation matches sequential results") {
  GeneratedFiltration gf = iterated_filtration();
  std::vector<LaurentPolynomial> inputs;
  for (const char* text : {"x1", "x2", "x1^2 - x2^3", "x1*x2", "x2^2", "x1^2"})
    inputs.push_back(parse_polynomial(text, dom2));
  std::vector<DegreeValue> sequential;
  for (const auto& f : inputs) sequential.push_back(eval_generated(gf, f));

  GeneratedFiltration fresh = iterated_filtration();  // unbuilt memo
  std::vector<std::vector<DegreeValue>> results(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t)
    workers.emplace_back([&, t] {
      for (const auto& f : inputs) results[t].push_back(eval_generated(fresh, f));
    });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == sequential);
}

TEST_CASE("check_axioms") {
  SplitMix64 rng(23);
  auto random_pairs = [&](const RingDomain& dom, std::size_t count) {
    std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> pairs;
    for (std::size_t i = 0; i < count; ++i)
      pairs.emplace_back(random_laurent_polynomial(rng, dom),
                         random_laurent_polynomial(rng, dom));
    return pairs;
  };

  SUBCASE("weighted degrees are semidegrees: no violations, multiplicative equality") {
    WeightedDegree d(dom2, {q(2, 3), q(1, 5)});
    auto pairs = random_pairs(dom2, 50);
    CHECK(check_axioms(evaluator(d), pairs).ok());
    for (const auto& [f, g] : pairs)
      CHECK(eval_weighted(d, poly_multiply(f, g)) == eval_weighted(d, f) + eval_weighted(d, g));
  }
  SUBCASE("the two-triangle subdegree passes") {
    CHECK(check_axioms(evaluator(figure1()), random_pairs(dom2, 50)).ok());
  }
  SUBCASE("the iterated filtration passes on in-box samples") {
    GeneratedFiltration gf = iterated_filtration(24, 40);
    std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> pairs;
    for (std::size_t i = 0; i < 10; ++i)
      pairs.emplace_back(random_laurent_polynomial(rng, dom2, 2, 2, 3),
                         random_laurent_polynomial(rng, dom2, 2, 2, 3));
    CHECK(check_axioms(evaluator(gf), pairs).ok());
  }
  SUBCASE("a corrupted function is flagged") {
    WeightedDegree base(dom2, {q(1), q(1)});
    LaurentPolynomial x = parse_polynomial("x", dom2);
    DegreeFn corrupted = [base, x](const LaurentPolynomial& f) {
      DegreeValue v = eval_weighted(base, f);
      if (f == x) return v + DegreeValue(q(1));  // post-hoc bump on one monomial
      return v;
    };
    std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> pairs = {
        {x, -x}, {x, parse_polynomial("y", dom2)}};
    CHECK_FALSE(check_axioms(corrupted, pairs).ok());
  }
}

TEST_CASE("homogeneity_probe") {
  CHECK(homogeneity_probe(evaluator(figure1()), parse_polynomial("x + y", dom2), 6).homogeneous);
  auto r = homogeneity_probe(evaluator(xx2_filtration()),
                             parse_polynomial("x", polynomial_domain(1)), 2);
  CHECK_FALSE(r.homogeneous);
  CHECK(r.first_failing_k == 2);
  WeightedDegree w(dom2, {q(-1, 2), q(3)});
  CHECK(homogeneity_probe(evaluator(w), parse_polynomial("x^2*y - x", dom2), 6).homogeneous);
}

TEST_CASE("minimal_presentation") {
  SUBCASE("both triangle parts survive") {
    Subdegree m = minimal_presentation(figure1());
    REQUIRE(m.parts.size() == 2);
    CHECK(m.parts[0].weight == RationalVector{q(1, 3), q(1, 2)});
    CHECK(m.parts[1].weight == RationalVector{q(1, 2), q(1, 3)});
  }
  SUBCASE("a dominated part is dropped on N^2") {
    Subdegree s({WeightedDegree(dom2, {q(1), q(1)}), WeightedDegree(dom2, {q(2), q(2)})});
    Subdegree m = minimal_presentation(s);
    REQUIRE(m.parts.size() == 1);
    CHECK(m.parts[0].weight == RationalVector{q(2), q(2)});
  }
  SUBCASE("single parts and duplicates collapse to themselves") {
    Subdegree s({figure1_part1(), figure1_part1()});
    Subdegree m = minimal_presentation(s);
    REQUIRE(m.parts.size() == 1);
    CHECK(m.parts[0].weight == figure1_part1().weight);
  }
  SUBCASE("kept parts agree with a bounded lattice search for strict winners") {
    // With integer weights bounded by 4 and at most 4 parts, any nonempty
    // open winning cone contains a lattice point with |alpha|_inf <= 64, so
    // the bounded search is an exact redundancy oracle here.
    SplitMix64 rng(43);
    for (int iter = 0; iter < 40; ++iter) {
      bool laurent = iter % 2;
      RingDomain dom = laurent ? laurent_domain(2) : polynomial_domain(2);
      std::size_t k = 2 + rng.uniform(0, 2);
      std::vector<WeightedDegree> parts;
      for (std::size_t i = 0; i < k; ++i)
        parts.emplace_back(dom, RationalVector{q(static_cast<long>(rng.uniform(0, 8)) - 4),
                                               q(static_cast<long>(rng.uniform(0, 8)) - 4)});
      Subdegree s(parts);
      Subdegree minimal = minimal_presentation(s);

      auto strictly_wins_somewhere = [&](const RationalVector& w) {
        long lo = laurent ? -64 : 0;
        for (long a = lo; a <= 64; ++a)
          for (long b = lo; b <= 64; ++b) {
            if (a == 0 && b == 0) continue;
            LatticeVector alpha{a, b};
            bool wins = true;
            for (const auto& p : parts)
              if (!(p.weight == w) && !(dot(w, alpha) > dot(p.weight, alpha))) {
                wins = false;
                break;
              }
            if (wins) return true;
          }
        return false;
      };
      for (const auto& p : parts) {
        bool kept = false;
        for (const auto& m : minimal.parts) kept = kept || m.weight == p.weight;
        CHECK(kept == strictly_wins_somewhere(p.weight));
      }
    }
  }
  SUBCASE("canonical output is order- and duplication-invariant") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
      std::vector<WeightedDegree> parts;
      std::size_t k = 1 + rng.uniform(0, 3);
      for (std::size_t i = 0; i < k; ++i) {
        RationalVector w;
        for (int c = 0; c < 2; ++c)
          w.push_back(Rational(Integer(static_cast<long>(rng.uniform(0, 8)) - 4),
                               Integer(static_cast<long>(rng.uniform(1, 3)))));
        parts.emplace_back(laurent_domain(2), w);
      }
      Subdegree a(parts);
      std::reverse(parts.begin(), parts.end());
      parts.push_back(parts.front());  // duplicate one part
      Subdegree b(parts);
      Subdegree ma = minimal_presentation(a), mb = minimal_presentation(b);
      REQUIRE(ma.parts.size() == mb.parts.size());
      for (std::size_t i = 0; i < ma.parts.size(); ++i)
        CHECK(ma.parts[i].weight == mb.parts[i].weight);
    }
  }
}

TEST_CASE("extract_semidegree") {
  SUBCASE("witness y singles out the first triangle") {
    auto r = extract_semidegree(figure1(), parse_polynomial("y", dom2),
                                parse_polynomial("x", dom2), 10);
    CHECK(r.converged);
    CHECK(r.value == DegreeValue(q(1, 3)));
  }
  SUBCASE("witness x singles out the second triangle") {
    auto r = extract_semidegree(figure1(), parse_polynomial("x", dom2),
                                parse_polynomial("y", dom2), 10);
    CHECK(r.converged);
    CHECK(r.value == DegreeValue(q(1, 3)));
  }
  SUBCASE("single part extracts immediately") {
    Subdegree s({figure1_part1()});
    LaurentPolynomial f = parse_polynomial("x^2 + y", dom2);
    auto r = extract_semidegree(s, parse_polynomial("x", dom2), f, 5);
    CHECK(r.converged);
    CHECK(r.value == eval_weighted(figure1_part1(), f));
  }
  SUBCASE("ties raise AmbiguousWitness") {
    CHECK_THROWS_WITH_AS(static_cast<void>(extract_semidegree(figure1(),
                                                              parse_polynomial("x*y", dom2),
                                                              parse_polynomial("x", dom2), 5)),
                         doctest::Contains("AmbiguousWitness"), Error);
  }
}

TEST_CASE("rees_normalize") {
  SUBCASE("the (x,1),(x^2,1) filtration normalizes x to 1/2") {
    GeneratedFiltration gf = xx2_filtration();
    RingDomain dom1 = polynomial_domain(1);
    // Oracle: delta(x^m) by independent span enumeration, m <= 12.
    std::vector<std::pair<LaurentPolynomial, unsigned>> gens = {
        {parse_polynomial("x", dom1), 1}, {parse_polynomial("x^2", dom1), 1}};
    for (unsigned m = 1; m <= 12; ++m) {
      auto lvl = oracles::filtration_level_brute(
          gens, LaurentPolynomial::monomial(dom1, LatticeVector{static_cast<long>(m)}), 12);
      REQUIRE(lvl == (m + 1) / 2);
    }
    auto r = rees_normalize(evaluator(gf), parse_polynomial("x", dom1), 12);
    CHECK(r.value == DegreeValue(q(1, 2)));
    CHECK(r.converged);
    // Convergence already holds by m = 4 (minimum at m = 2 and m = 4).
    CHECK(rees_normalize(evaluator(gf), parse_polynomial("x", dom1), 4).converged);
  }
  SUBCASE("subdegrees are their own normalization") {
    auto r = rees_normalize(evaluator(figure1()), parse_polynomial("x*y", dom2), 6);
    CHECK(r.value == DegreeValue(q(5, 6)));
    CHECK(r.converged);
  }
  SUBCASE("weighted degrees stabilize at m = 1") {
    WeightedDegree w(dom2, {q(3, 7), q(2)});
    LaurentPolynomial f = parse_polynomial("x*y^2 + x^2", dom2);
    auto r = rees_normalize(evaluator(w), f, 4);
    CHECK(r.value == eval_weighted(w, f));
    CHECK(r.converged);
  }
  SUBCASE("Fekete bound: normalization never exceeds the value") {
    SplitMix64 rng(37);
    // Exponents <= 1 and m <= 4 keep delta(f^m) <= 4 * delta(x1 x2) = 20 < 24.
    GeneratedFiltration gf = iterated_filtration(24, 60);
    for (int iter = 0; iter < 10; ++iter) {
      LaurentPolynomial f = random_laurent_polynomial(rng, dom2, 2, 1, 3);
      if (f.is_zero()) continue;
      auto r = rees_normalize(evaluator(gf), f, 4);
      CHECK(r.value <= eval_generated(gf, f));
    }
  }
}

TEST_CASE("scale_to_integer") {
  CHECK(scale_to_integer({DegreeValue(q(1, 2)), DegreeValue(q(1, 3)), DegreeValue(q(5, 6))}) == 6);
  CHECK(scale_to_integer({DegreeValue(q(3)), DegreeValue(q(2)), DegreeValue(q(1))}) == 1);
  CHECK(scale_to_integer({DegreeValue(q(1, 2))}) == 2);
  CHECK_THROWS_AS(scale_to_integer({DegreeValue::neg_infinity()}), Error);
}

TEST_CASE("components_at_infinity") {
  SUBCASE("zero part on the Laurent lattice contributes N - 1") {
    Subdegree s({WeightedDegree(laurent_domain(2), {q(1), q(1)}),
                 WeightedDegree(laurent_domain(2), {q(0), q(0)})});
    CHECK(components_at_infinity(s) == 1);
  }
  SUBCASE("zero part on N^2 is plain redundant; count still 1") {
    Subdegree s({WeightedDegree(dom2, {q(1), q(1)}), WeightedDegree(dom2, {q(0), q(0)})});
    CHECK(components_at_infinity(s) == 1);
  }
  SUBCASE("the two-triangle subdegree has two components") {
    CHECK(components_at_infinity(figure1()) == 2);
  }
  SUBCASE("single nonzero part") {
    CHECK(components_at_infinity(Subdegree({figure1_part1()})) == 1);
  }
  SUBCASE("negative subdegrees are rejected") {
    Subdegree s({WeightedDegree(laurent_domain(2), {q(1), q(1)})});
    CHECK_THROWS_WITH_AS(static_cast<void>(components_at_infinity(s)),
                         doctest::Contains("NotNonNegative"), Error);
  }
}

TEST_CASE("divisor_at_infinity") {
  SUBCASE("single part (2, 4) has multiplicity 2") {
    Subdegree s({WeightedDegree(dom2, {q(2), q(4)})});
    DivisorAtInfinity d = divisor_at_infinity(s);
    CHECK(d.scaling_e == 1);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].multiplicity == 2);
    CHECK(d.components[0].coefficient == q(1, 2));
    // Brute-force gcd of sampled positive values agrees.
    CHECK(oracles::gcd_positive_values_brute(LatticeVector{2, 4}, false, 6) == 2);
  }
  SUBCASE("single part (1, 1) has multiplicity 1") {
    Subdegree s({WeightedDegree(dom2, {q(1), q(1)})});
    DivisorAtInfinity d = divisor_at_infinity(s);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].multiplicity == 1);
    CHECK(d.components[0].coefficient == q(1));
  }
  SUBCASE("the two-triangle subdegree scales by 6 with unit multiplicities") {
    DivisorAtInfinity d = divisor_at_infinity(figure1());
    CHECK(d.scaling_e == 6);
    REQUIRE(d.components.size() == 2);
    for (const auto& c : d.components) {
      CHECK(c.multiplicity == 1);
      CHECK(c.coefficient == q(1));
    }
    CHECK(oracles::gcd_positive_values_brute(LatticeVector{2, 3}, false, 6) == 1);
  }
  SUBCASE("sampled-value gcd cross-check on random integer weights") {
    SplitMix64 rng(41);
    for (int iter = 0; iter < 60; ++iter) {
      bool laurent = iter % 2;
      RingDomain dom = laurent ? laurent_domain(2) : polynomial_domain(2);
      LatticeVector w{static_cast<long>(rng.uniform(0, 12)) - (laurent ? 6 : 0),
                      static_cast<long>(rng.uniform(0, 12)) - (laurent ? 6 : 0)};
      if (w.is_zero()) continue;
      RationalVector wq = rational_vector(w);
      Subdegree s({WeightedDegree(dom, wq)});
      // cap 12: a Bezout witness for entries up to 6 needs |alpha| <= 12
      Integer sampled = oracles::gcd_positive_values_brute(w, laurent, 12);
      if (sampled == 0) {
        CHECK_THROWS_WITH_AS(static_cast<void>(divisor_at_infinity(s)),
                             doctest::Contains("DegeneratePart"), Error);
        continue;
      }
      DivisorAtInfinity d = divisor_at_infinity(s);
      REQUIRE(d.components.size() == 1);
      CHECK(d.components[0].multiplicity == sampled);
    }
  }
  SUBCASE("parts with no positive values are degenerate") {
    Subdegree s({WeightedDegree(dom2, {q(-1), q(0)})});
    CHECK_THROWS_WITH_AS(static_cast<void>(divisor_at_infinity(s)),
                         doctest::Contains("DegeneratePart"), Error);
  }
}
