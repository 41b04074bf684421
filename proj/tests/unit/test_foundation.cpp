#include <deginf/cone.hpp>
#include <deginf/laurent.hpp>
#include <deginf/matrix.hpp>
#include <deginf/rng.hpp>

#include <doctest.h>

#include <set>

using namespace deginf;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

RationalMatrix mat2(long a, long b, long c, long d) {
  RationalMatrix m(2, 2);
  m.at(0, 0) = q(a);
  m.at(0, 1) = q(b);
  m.at(1, 0) = q(c);
  m.at(1, 1) = q(d);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced with positive denominators") {
  Rational r(Integer(4), Integer(-6));
  CHECK(r.num() == -2);
  CHECK(r.den() == 3);
  CHECK(Rational::parse("1/3") + Rational::parse("1/6") == q(1, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(q(5, 10).str() == "1/2");
  CHECK_THROWS_AS(q(1) / q(0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("primitive_vector") {
  SUBCASE("integer input divides by the gcd") {
    auto r = primitive_vector({q(2), q(4)});
    CHECK(r.vector == LatticeVector{1, 2});
    CHECK(r.scale == q(2));
  }
  SUBCASE("the weight vector (1/3, 1/2) has primitive form (2, 3)") {
    auto r = primitive_vector({q(1, 3), q(1, 2)});
    CHECK(r.vector == LatticeVector{2, 3});
    CHECK(r.scale == q(1, 6));
  }
  SUBCASE("already primitive") {
    auto r = primitive_vector({q(-1), q(0)});
    CHECK(r.vector == LatticeVector{-1, 0});
    CHECK(r.scale == q(1));
  }
  SUBCASE("zero vector is rejected") {
    CHECK_THROWS_AS(primitive_vector({q(0), q(0)}), Error);
  }
  SUBCASE("scaling invariance: primitive(k v) = primitive(v) with scale * k") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
      RationalVector v;
      bool zero = true;
      for (int i = 0; i < 3; ++i) {
        long num = static_cast<long>(rng.uniform(0, 12)) - 6;
        zero = zero && num == 0;
        v.push_back(Rational(Integer(num), Integer(static_cast<long>(rng.uniform(1, 5)))));
      }
      if (zero) continue;
      Rational k(Integer(static_cast<long>(rng.uniform(1, 9))),
                 Integer(static_cast<long>(rng.uniform(1, 9))));
      auto base = primitive_vector(v);
      auto scaled = primitive_vector(scale(v, k));
      CHECK(scaled.vector == base.vector);
      CHECK(scaled.scale == base.scale * k);
    }
  }
}

TEST_CASE("matrix_invert") {
  SUBCASE("frozen 2x2") {
    auto r = matrix_invert(mat2(1, 2, 1, 1));
    CHECK(r.det == q(-1));
    CHECK(r.inverse == mat2(-1, 2, 1, -1));
    CHECK(mat2(1, 2, 1, 1) * r.inverse == RationalMatrix::identity(2));
  }
  SUBCASE("identity") {
    auto r = matrix_invert(RationalMatrix::identity(3));
    CHECK(r.det == q(1));
    CHECK(r.inverse == RationalMatrix::identity(3));
  }
  SUBCASE("dependent rows are singular") {
    CHECK(determinant(mat2(1, 1, 2, 2)) == q(0));
    CHECK_THROWS_AS(matrix_invert(mat2(1, 1, 2, 2)), Error);
  }
  SUBCASE("random matrices: M * M^{-1} = I exactly, det matches cofactor route") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 120; ++iter) {
      std::size_t n = 1 + iter % 4;
      RationalMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m.at(i, j) = Rational(Integer(static_cast<long>(rng.uniform(0, 10)) - 5),
                                Integer(static_cast<long>(rng.uniform(1, 4))));
      Rational det = determinant(m);
      CHECK(det == determinant_cofactor(m));
      if (det.is_zero()) continue;
      CHECK(m * matrix_invert(m).inverse == RationalMatrix::identity(n));
    }
  }
}

TEST_CASE("poly_multiply") {
  RingDomain dom = polynomial_domain(2);
  LaurentPolynomial x = parse_polynomial("x", dom);
  LaurentPolynomial y = parse_polynomial("y", dom);

  SUBCASE("difference of squares") {
    auto f = parse_polynomial("x^2 - y^3", dom);
    auto g = parse_polynomial("x^2 + y^3", dom);
    CHECK(poly_multiply(f, g) == parse_polynomial("x^4 - y^6", dom));
  }
  SUBCASE("multiplication by zero") {
    CHECK(poly_multiply(x, LaurentPolynomial::zero(dom)).is_zero());
  }
  SUBCASE("binomial square") {
    CHECK((x + y).pow(2) == parse_polynomial("x^2 + 2*x*y + y^2", dom));
  }
  SUBCASE("domain mismatch is an error") {
    CHECK_THROWS_AS(poly_multiply(x, parse_polynomial("x", laurent_domain(2))), Error);
  }
  SUBCASE("commutative and associative on random triples; product support is a Minkowski sum") {
    SplitMix64 rng(13);
    RingDomain ldom = laurent_domain(2);
    for (int iter = 0; iter < 100; ++iter) {
      LaurentPolynomial f(ldom), g(ldom), h(ldom);
      for (auto* p : {&f, &g, &h})
        for (int t = 0; t < 3; ++t) {
          LatticeVector e{static_cast<long>(rng.uniform(0, 6)) - 3,
                          static_cast<long>(rng.uniform(0, 6)) - 3};
          p->add_term(e, Rational(Integer(static_cast<long>(rng.uniform(1, 5)))));
        }
      CHECK(poly_multiply(f, g) == poly_multiply(g, f));
      CHECK(poly_multiply(poly_multiply(f, g), h) == poly_multiply(f, poly_multiply(g, h)));

      // All positive coefficients here, so no cancellation: the product
      // support is exactly the Minkowski sum of the supports.
      auto prod = poly_multiply(f, g);
      std::set<LatticeVector> expected;
      for (const auto& [ea, ca] : f.terms())
        for (const auto& [eb, cb] : g.terms()) expected.insert(ea + eb);
      std::set<LatticeVector> got;
      for (const auto& [e, c] : prod.terms()) got.insert(e);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("polynomial text parsing") {
  RingDomain dom = polynomial_domain(2);
  CHECK(parse_polynomial("2*x1^2*x2 - 1/2", dom).str() == "2*x1^2*x2 - 1/2");
  CHECK(parse_polynomial("x*y", dom) == parse_polynomial("x1*x2", dom));
  CHECK(parse_polynomial("x - x", dom).is_zero());
  CHECK(parse_polynomial("x^-1", laurent_domain(1)).str() == "x1^-1");
  CHECK_THROWS_AS(parse_polynomial("x^-1", polynomial_domain(1)), Error);
  CHECK_THROWS_AS(parse_polynomial("z", dom), Error);
  CHECK_THROWS_AS(parse_polynomial("1 +", dom), Error);
  CHECK_THROWS_AS(parse_polynomial("", dom), Error);
}

TEST_CASE("strict_cone_feasible") {
  auto substitution_holds = [](const std::vector<RationalVector>& rows, const LatticeVector& a) {
    for (const auto& r : rows)
      if (dot(r, a).sign() <= 0) return false;
    return true;
  };

  SUBCASE("halfspace meets N^2") {
    std::vector<RationalVector> rows = {{q(1), q(-1)}};
    auto a = strict_cone_feasible(rows, polynomial_domain(2));
    REQUIRE(a.has_value());
    CHECK(a->all_nonnegative());
    CHECK(substitution_holds(rows, *a));
  }
  SUBCASE("contradictory rows have no witness") {
    std::vector<RationalVector> rows = {{q(1), q(0)}, {q(-1), q(0)}};
    CHECK_FALSE(strict_cone_feasible(rows, laurent_domain(2)).has_value());
  }
  SUBCASE("the redundancy test row (1/6, -1/6) is feasible over N^2") {
    std::vector<RationalVector> rows = {{q(1, 6), q(-1, 6)}};
    auto a = strict_cone_feasible(rows, polynomial_domain(2));
    REQUIRE(a.has_value());
    CHECK(substitution_holds(rows, *a));
  }
  SUBCASE("a negative-orthant target is infeasible over N^2 but feasible over Z^2") {
    std::vector<RationalVector> rows = {{q(-1), q(0)}, {q(0), q(-1)}};
    CHECK_FALSE(strict_cone_feasible(rows, polynomial_domain(2)).has_value());
    auto a = strict_cone_feasible(rows, laurent_domain(2));
    REQUIRE(a.has_value());
    CHECK(substitution_holds(rows, *a));
  }
  SUBCASE("random systems: any witness satisfies every strict inequality") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
      std::size_t n = 2 + iter % 2;
      std::vector<RationalVector> rows(1 + rng.uniform(0, 3));
      for (auto& r : rows)
        for (std::size_t i = 0; i < n; ++i)
          r.push_back(Rational(Integer(static_cast<long>(rng.uniform(0, 10)) - 5)));
      RingDomain dom = (iter % 2) ? laurent_domain(n) : polynomial_domain(n);
      auto a = strict_cone_feasible(rows, dom);
      if (a) {
        CHECK(dom.contains(*a));
        CHECK_FALSE(a->is_zero());
        CHECK(substitution_holds(rows, *a));
      }
    }
  }
}

TEST_CASE("splitmix64 streams are deterministic") {
  SplitMix64 a = SplitMix64::derived(42, 7);
  SplitMix64 b = SplitMix64::derived(42, 7);
  for (int i = 0; i < 32; ++i) CHECK(a.next() == b.next());
  SplitMix64 c = SplitMix64::derived(42, 8);
  CHECK(SplitMix64::derived(42, 7).next() != c.next());
}
