#include "deginf/suite.hpp"

#include <algorithm>
#include <sstream>

#include "deginf/cone.hpp"

namespace deginf {

namespace {

long pick_signed(SplitMix64& rng, long bound) {
  return static_cast<long>(rng.uniform(0, 2 * static_cast<std::uint64_t>(bound))) - bound;
}

Rational random_nonzero_coef(SplitMix64& rng, long bound) {
  long num = 0;
  while (num == 0) num = pick_signed(rng, bound);
  long den = static_cast<long>(rng.uniform(1, static_cast<std::uint64_t>(bound)));
  return Rational(Integer(num), Integer(den));
}

}  // namespace

LaurentPolynomial random_laurent_polynomial(SplitMix64& rng, const RingDomain& dom,
                                            unsigned max_terms, long exp_bound, long coef_bound) {
  LaurentPolynomial p(dom);
  unsigned terms = static_cast<unsigned>(rng.uniform(1, max_terms));
  while (p.term_count() < terms) {
    LatticeVector e(dom.n);
    for (std::size_t i = 0; i < dom.n; ++i)
      e[i] = Integer(dom.mode == RingMode::Laurent
                         ? pick_signed(rng, exp_bound)
                         : static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(exp_bound))));
    p.add_term(e, random_nonzero_coef(rng, coef_bound));
  }
  return p;
}

RationalPolytope random_interior_polytope(SplitMix64& rng, std::size_t n, long bound) {
  if (n != 2 && n != 3) fail(Errc::ConfigError, "random polytopes support n in {2, 3}");
  for (unsigned attempt = 0; attempt < 500; ++attempt) {
    std::vector<RationalVector> pts;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      RationalVector v;
      for (std::size_t i = 0; i < n; ++i) {
        long num = static_cast<long>(rng.uniform(1, static_cast<std::uint64_t>(bound)));
        long den = static_cast<long>(rng.uniform(1, 3));
        if (mask & (1u << i)) num = -num;
        v.push_back(Rational(Integer(num), Integer(den)));
      }
      pts.push_back(std::move(v));
    }
    std::size_t extras = rng.uniform(0, 2);
    for (std::size_t e = 0; e < extras; ++e) {
      RationalVector v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(Integer(pick_signed(rng, bound))));
      pts.push_back(std::move(v));
    }
    try {
      return RationalPolytope::from_vertices(n, OriginMode::Interior, std::move(pts));
    } catch (const Error&) {
      continue;  // origin on the boundary or degenerate draw; redraw
    }
  }
  fail(Errc::ConfigError, "could not sample an origin-interior polytope");
}

std::vector<LatticeVector> random_positive_normals(SplitMix64& rng, std::size_t k,
                                                   unsigned long entry_bound) {
  std::vector<LatticeVector> vs;
  unsigned retries = 0;
  while (vs.size() < k) {
    LatticeVector v{0, 0};
    v[0] = Integer(static_cast<unsigned long>(rng.uniform(1, entry_bound)));
    v[1] = Integer(static_cast<unsigned long>(rng.uniform(1, entry_bound)));
    v = v.primitive();
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) {
      if (++retries > 10000) fail(Errc::ConfigError, "normal pool exhausted; raise entry bound");
      continue;
    }
    vs.push_back(std::move(v));
  }
  return vs;
}

Polygon2 random_polygon2(SplitMix64& rng, std::size_t k_max, unsigned long entry_bound) {
  std::size_t k = rng.uniform(1, k_max);
  std::vector<LatticeVector> vs = random_positive_normals(rng, k, entry_bound);
  // Canonical edge order: decreasing slope keeps the chain convex.
  std::sort(vs.begin(), vs.end(), [](const LatticeVector& a, const LatticeVector& b) {
    return sgn(a[0] * b[1] - a[1] * b[0]) < 0;
  });

  std::vector<Integer> steps;
  Integer height = 0;
  for (const auto& v : vs) {
    Integer t(static_cast<unsigned long>(rng.uniform(1, 3)));
    height += t * v[0];
    steps.push_back(std::move(t));
  }

  std::vector<RationalVector> verts;
  verts.push_back({Rational(0), Rational(0)});
  Rational x(0), y{Rational(height)};
  verts.push_back({x, y});
  for (std::size_t j = 0; j < vs.size(); ++j) {
    x += Rational(steps[j] * vs[j][1]);
    y -= Rational(steps[j] * vs[j][0]);
    verts.push_back({x, y});
  }
  return Polygon2(RationalPolytope::from_vertices(2, OriginMode::VertexOnAxes, std::move(verts)));
}

std::optional<LatticeVector> scaled_part_witness(const Subdegree& minimal, std::size_t part,
                                                 long exp_bound) {
  std::vector<RationalVector> rows;
  for (std::size_t j = 0; j < minimal.parts.size(); ++j)
    if (j != part) rows.push_back(minimal.parts[part].weight - minimal.parts[j].weight);
  auto alpha = strict_cone_feasible(rows, minimal.domain);
  if (!alpha) return std::nullopt;

  // delta_j(f) - delta_part(f) <= exp_bound * |w_j - w_part|_1, so a witness
  // margin beyond that bound freezes the sequence from k = 1 on.
  Integer factor = 1;
  for (const auto& diff : rows) {
    Rational margin = dot(diff, *alpha);  // > 0 by feasibility
    Rational spread(0);
    for (const auto& x : diff) spread += x.abs();
    spread *= Rational(exp_bound);
    Rational needed = spread / margin;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), needed.num().get_mpz_t(), needed.den().get_mpz_t());
    fl += 1;
    if (fl > factor) factor = fl;
  }
  return alpha->scaled(factor);
}

namespace {

struct PropertyRun {
  PropertyResult result;

  explicit PropertyRun(std::string name) { result.name = std::move(name); }

  void record(bool ok, const std::string& detail) {
    ++result.instances;
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = detail;
    }
  }
};

constexpr std::uint64_t kStreamOracle = 1, kStreamAxioms = 2, kStreamHomogeneity = 3,
                        kStreamIntersection = 4, kStreamNef = 5, kStreamAmpleness = 6,
                        kStreamExtraction = 7;

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  const bool break_linking = options.mutate == "break-linking";
  if (!options.mutate.empty() && !break_linking)
    fail(Errc::ConfigError, "unknown mutation hook '" + options.mutate + "'");

  // Shared polytope corpus (subdegrees reused by several properties).
  std::vector<RationalPolytope> corpus;
  {
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamOracle);
    for (std::size_t i = 0; i < options.polytopes_2d; ++i)
      corpus.push_back(random_interior_polytope(rng, 2));
    for (std::size_t i = 0; i < options.polytopes_3d; ++i)
      corpus.push_back(random_interior_polytope(rng, 3));
  }

  {
    PropertyRun run("polytope-oracle-agreement");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamOracle + 100);
    for (const auto& p : corpus) {
      Subdegree s = subdegree_from_polytope(p);
      for (std::size_t j = 0; j < options.polys_per_polytope; ++j) {
        LaurentPolynomial f = random_laurent_polynomial(rng, p.ring_domain());
        DegreeValue a = eval_by_scaling(p, f);
        DegreeValue b = eval_subdegree(s, f);
        run.record(a == b, "scaling " + a.str() + " != parts " + b.str() + " at f = " + f.str());
      }
    }
    report.properties.push_back(run.result);
  }

  {
    PropertyRun run("degree-axioms");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamAxioms);
    std::size_t sampled = std::min<std::size_t>(corpus.size(), 20);
    for (std::size_t i = 0; i < sampled; ++i) {
      const auto& p = corpus[i];
      std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> pairs;
      for (std::size_t j = 0; j < options.axiom_pairs; ++j)
        pairs.emplace_back(random_laurent_polynomial(rng, p.ring_domain()),
                           random_laurent_polynomial(rng, p.ring_domain()));
      AxiomReport axioms = check_axioms(evaluator(subdegree_from_polytope(p)), pairs);
      run.record(axioms.ok(), axioms.ok() ? "" : axioms.violations.front().detail);
    }
    report.properties.push_back(run.result);
  }

  {
    PropertyRun run("subdegree-homogeneity");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamHomogeneity);
    std::size_t sampled = std::min<std::size_t>(corpus.size(), 40);
    for (std::size_t i = 0; i < sampled; ++i) {
      const auto& p = corpus[i];
      LaurentPolynomial f = random_laurent_polynomial(rng, p.ring_domain(), 3, 3, 5);
      HomogeneityResult h = homogeneity_probe(evaluator(subdegree_from_polytope(p)), f, 6);
      run.record(h.homogeneous,
                 "delta(f^k) != k delta(f) at k = " + std::to_string(h.first_failing_k));
    }
    report.properties.push_back(run.result);
  }

  {
    PropertyRun run("extraction-consistency");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamExtraction);
    std::size_t sampled = std::min<std::size_t>(corpus.size(), 25);
    for (std::size_t i = 0; i < sampled; ++i) {
      const auto& p = corpus[i];
      Subdegree s = minimal_presentation(subdegree_from_polytope(p));
      for (std::size_t part = 0; part < s.parts.size(); ++part) {
        auto alpha = scaled_part_witness(s, part, 3);
        if (!alpha) {
          run.record(false, "minimal part lost its witness");
          continue;
        }
        LaurentPolynomial witness = LaurentPolynomial::monomial(s.domain, *alpha);
        LaurentPolynomial f = random_laurent_polynomial(rng, s.domain, 3, 3, 5);
        ExtractionResult ex = extract_semidegree(s, witness, f, 10);
        DegreeValue expected = eval_weighted(s.parts[part], f);
        run.record(ex.converged && ex.value == expected,
                   "extraction " + ex.value.str() + " vs part value " + expected.str());
      }
    }
    report.properties.push_back(run.result);
  }

  {
    PropertyRun run("intersection-identity");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamIntersection);
    for (std::size_t i = 0; i < options.polygons; ++i) {
      Polygon2 polygon = random_polygon2(rng, 6, 20);
      IntersectionReport r = intersection_report(polygon);
      RationalMatrix fan = r.intersection_fan;
      if (break_linking && fan.rows() > 0) fan.at(0, 0) += Rational(1);
      bool product_ok = (r.linking * fan == r.boundary);
      bool routes_ok = (r.intersection_linking == fan);
      bool symmetric = fan.is_symmetric() && r.intersection_linking.is_symmetric();
      bool invertible = !r.det_linking.is_zero();
      std::string detail;
      if (!(product_ok && routes_ok && symmetric && invertible)) {
        std::ostringstream os;
        os << "L*I = D: " << (product_ok ? "ok" : "violated")
           << ", routes: " << (routes_ok ? "agree" : "disagree") << "; normals:";
        for (const auto& v : polygon.normals()) os << " " << v.str();
        detail = os.str();
      }
      run.record(product_ok && routes_ok && symmetric && invertible, detail);
    }
    report.properties.push_back(run.result);
  }

  {
    PropertyRun run("nef-route-agreement");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamNef);
    for (std::size_t i = 0; i < options.nef_instances; ++i) {
      std::size_t k = rng.uniform(2, 5);
      std::vector<LatticeVector> vs = random_positive_normals(rng, k, 9);
      RationalVector m;
      for (std::size_t j = 0; j < k; ++j)
        m.push_back(Rational(Integer(static_cast<long>(rng.uniform(1, 9))),
                             Integer(static_cast<long>(rng.uniform(1, 9)))));
      try {
        // nef_membership itself raises InternalInvariant when the witness and
        // intersection routes disagree; reaching here means they agreed.
        nef_membership(vs, m);
        run.record(true, "");
      } catch (const Error& e) {
        run.record(false, e.what());
      }
    }
    report.properties.push_back(run.result);
  }

  {
    PropertyRun run("ampleness-at-infinity");
    SplitMix64 rng = SplitMix64::derived(options.seed, kStreamAmpleness);
    for (std::size_t i = 0; i < options.ampleness_polygons; ++i) {
      Polygon2 polygon = random_polygon2(rng, 5, 12);
      bool ample = ampleness_at_infinity(polygon);
      std::string detail;
      if (!ample) {
        std::ostringstream os;
        os << "divisor at infinity not ample for normals:";
        for (const auto& v : polygon.normals()) os << " " << v.str();
        detail = os.str();
      }
      run.record(ample, detail);
    }
    report.properties.push_back(run.result);
  }

  return report;
}

std::string suite_report_to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& p : report.properties) {
    os << (p.ok() ? "[PASS] " : "[FAIL] ") << p.name << ": " << p.instances - p.failures << "/"
       << p.instances << " instances";
    if (!p.ok()) os << " -- " << p.first_failure;
    os << "\n";
  }
  os << (report.all_ok() ? "suite: all properties passed" : "suite: FAILURES present") << "\n";
  return os.str();
}

}  // namespace deginf
