#include "deginf/degree.hpp"

#include <algorithm>
#include <mutex>

#include "deginf/cone.hpp"

namespace deginf {

const Rational& DegreeValue::value() const {
  if (neg_inf_) fail(Errc::DomainMismatch, "NEG_INFINITY has no rational value");
  return v_;
}

DegreeValue DegreeValue::operator+(const DegreeValue& o) const {
  if (neg_inf_ || o.neg_inf_) return neg_infinity();
  return DegreeValue(v_ + o.v_);
}

DegreeValue DegreeValue::scaled(const Rational& k) const {
  if (k.sign() <= 0) fail(Errc::DomainMismatch, "degree values scale by positive factors only");
  if (neg_inf_) return neg_infinity();
  return DegreeValue(v_ * k);
}

bool DegreeValue::operator<(const DegreeValue& o) const {
  if (neg_inf_) return !o.neg_inf_;
  if (o.neg_inf_) return false;
  return v_ < o.v_;
}

std::string DegreeValue::str() const { return neg_inf_ ? "-inf" : v_.str(); }

DegreeValue max(const DegreeValue& a, const DegreeValue& b) { return a < b ? b : a; }

WeightedDegree::WeightedDegree(RingDomain d, RationalVector w)
    : domain(d), weight(std::move(w)) {
  if (weight.size() != domain.n)
    fail(Errc::DomainMismatch, "weight vector length differs from ring dimension");
}

Subdegree::Subdegree(std::vector<WeightedDegree> ps) : domain(), parts(std::move(ps)) {
  if (parts.empty()) fail(Errc::DomainMismatch, "subdegree needs at least one part");
  domain = parts.front().domain;
  for (const auto& p : parts)
    if (p.domain != domain) fail(Errc::DomainMismatch, "subdegree parts on different rings");
}

DegreeValue eval_weighted(const WeightedDegree& d, const LaurentPolynomial& f) {
  if (f.domain() != d.domain) fail(Errc::DomainMismatch, "polynomial from a different ring");
  DegreeValue best = DegreeValue::neg_infinity();
  for (const auto& [e, c] : f.terms()) best = max(best, DegreeValue(dot(d.weight, e)));
  return best;
}

DegreeValue eval_subdegree(const Subdegree& s, const LaurentPolynomial& f) {
  if (f.domain() != s.domain) fail(Errc::DomainMismatch, "polynomial from a different ring");
  DegreeValue best = DegreeValue::neg_infinity();
  for (const auto& p : s.parts) best = max(best, eval_weighted(p, f));
  return best;
}

// ---------------------------------------------------------------------------
// Generated filtrations

namespace {
constexpr std::size_t kMaxBoxPoints = 1u << 20;
constexpr std::size_t kMaxProducts = 1u << 18;
}  // namespace

/// Reduced spanning rows of the filtration levels, built once on demand.
/// Rows are inserted level by level with forward-only elimination, so the
/// prefix of rows up to level d spans exactly F_d (cut to the box).
struct GeneratedFiltration::SpanState {
  std::mutex mu;
  bool built = false;

  std::map<LatticeVector, std::size_t> coord_index;
  struct Row {
    unsigned level;
    std::size_t pivot;
    RationalVector v;
  };
  std::vector<Row> rows;
};

GeneratedFiltration::GeneratedFiltration(RingDomain domain, std::vector<Generator> generators,
                                         Caps caps)
    : dom_(domain), gens_(std::move(generators)), caps_(std::move(caps)),
      state_(std::make_shared<SpanState>()) {
  if (caps_.box.size() != dom_.n)
    fail(Errc::DomainMismatch, "exponent box dimension differs from ring dimension");
  for (const auto& [lo, hi] : caps_.box)
    if (lo > hi) fail(Errc::ConfigError, "empty exponent box range");
  for (const auto& g : gens_) {
    if (g.poly.domain() != dom_) fail(Errc::DomainMismatch, "generator from a different ring");
    if (g.poly.is_zero()) fail(Errc::ConfigError, "zero polynomial as filtration generator");
    if (g.weight == 0) fail(Errc::ConfigError, "filtration generator weights must be positive");
  }
}

namespace {

bool in_box(const LaurentPolynomial& p,
            const std::vector<std::pair<Integer, Integer>>& box) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < box.size(); ++i)
      if (e[i] < box[i].first || e[i] > box[i].second) return false;
  return true;
}

}  // namespace

DegreeValue eval_generated(const GeneratedFiltration& gf, const LaurentPolynomial& f) {
  if (f.domain() != gf.domain()) fail(Errc::DomainMismatch, "polynomial from a different ring");
  if (f.is_zero()) return DegreeValue::neg_infinity();
  const auto& caps = gf.caps();
  if (!in_box(f, caps.box))
    fail(Errc::BoxExceeded, "polynomial support leaves the exponent box");

  auto& st = *gf.state_;
  std::lock_guard<std::mutex> lock(st.mu);

  if (!st.built) {
    // Coordinates: box lattice points in scan order.
    std::size_t total = 1;
    for (const auto& [lo, hi] : caps.box) {
      Integer width = hi - lo + 1;
      if (!width.fits_ulong_p() || total > kMaxBoxPoints / width.get_ui())
        fail(Errc::ConfigError, "exponent box too large for exact span computation");
      total *= width.get_ui();
    }
    std::vector<Integer> cursor;
    for (const auto& [lo, hi] : caps.box) cursor.push_back(lo);
    for (std::size_t idx = 0; idx < total; ++idx) {
      st.coord_index.emplace(LatticeVector(cursor), idx);
      for (std::size_t i = caps.box.size(); i-- > 0;) {
        if (cursor[i] < caps.box[i].second) {
          ++cursor[i];
          break;
        }
        cursor[i] = caps.box[i].first;
      }
    }

    // All generator products of total weight <= d_max, keeping those whose
    // support stays in the box. Out-of-box intermediates are still multiplied
    // on: a later factor may cancel the offending terms.
    const LaurentPolynomial one = LaurentPolynomial::constant(gf.domain(), Rational(1));
    std::vector<std::pair<unsigned, LaurentPolynomial>> pool;
    pool.emplace_back(0u, one);
    std::size_t visited = 0;
    auto recurse = [&](auto&& self, std::size_t gen_idx, unsigned weight,
                       const LaurentPolynomial& prod) -> void {
      if (gen_idx == gf.generators().size()) return;
      self(self, gen_idx + 1, weight, prod);
      const auto& g = gf.generators()[gen_idx];
      LaurentPolynomial acc = prod;
      unsigned w = weight;
      while (w + g.weight <= caps.d_max) {
        w += g.weight;
        acc = poly_multiply(acc, g.poly);
        if (++visited > kMaxProducts)
          fail(Errc::ConfigError, "generator product pool too large");
        if (in_box(acc, caps.box)) pool.emplace_back(w, acc);
        self(self, gen_idx + 1, w, acc);
      }
    };
    recurse(recurse, 0, 0, one);
    std::stable_sort(pool.begin(), pool.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // Forward-only Gaussian insertion keeps prefix spans intact.
    for (auto& [w, poly] : pool) {
      RationalVector vec(st.coord_index.size());
      for (const auto& [e, c] : poly.terms()) vec[st.coord_index.at(e)] = c;
      for (const auto& row : st.rows) {
        if (vec[row.pivot].is_zero()) continue;
        Rational factor = vec[row.pivot];
        for (std::size_t j = row.pivot; j < vec.size(); ++j)
          if (!row.v[j].is_zero()) vec[j] -= factor * row.v[j];
      }
      std::size_t pivot = 0;
      while (pivot < vec.size() && vec[pivot].is_zero()) ++pivot;
      if (pivot == vec.size()) continue;
      Rational inv = vec[pivot].reciprocal();
      for (std::size_t j = pivot; j < vec.size(); ++j)
        if (!vec[j].is_zero()) vec[j] *= inv;
      st.rows.push_back({w, pivot, std::move(vec)});
    }
    st.built = true;
  }

  RationalVector vec(st.coord_index.size());
  for (const auto& [e, c] : f.terms()) vec[st.coord_index.at(e)] = c;

  auto vanished = [&vec]() {
    for (const auto& x : vec)
      if (!x.is_zero()) return false;
    return true;
  };

  std::size_t next_row = 0;
  for (unsigned d = 0; d <= caps.d_max; ++d) {
    while (next_row < st.rows.size() && st.rows[next_row].level <= d) {
      const auto& row = st.rows[next_row++];
      if (!vec[row.pivot].is_zero()) {
        Rational factor = vec[row.pivot];
        for (std::size_t j = row.pivot; j < vec.size(); ++j)
          if (!row.v[j].is_zero()) vec[j] -= factor * row.v[j];
      }
    }
    if (vanished()) return DegreeValue(Rational(static_cast<long>(d)));
  }
  fail(Errc::CapExceeded, "polynomial not reached within D_max inside the box");
}

DegreeFn evaluator(const WeightedDegree& d) {
  return [d](const LaurentPolynomial& f) { return eval_weighted(d, f); };
}
DegreeFn evaluator(const Subdegree& s) {
  return [s](const LaurentPolynomial& f) { return eval_subdegree(s, f); };
}
DegreeFn evaluator(const GeneratedFiltration& gf) {
  return [gf](const LaurentPolynomial& f) { return eval_generated(gf, f); };
}

// ---------------------------------------------------------------------------

AxiomReport check_axioms(
    const DegreeFn& delta,
    const std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>>& samples) {
  AxiomReport report;
  if (samples.empty()) return report;

  const RingDomain dom = samples.front().first.domain();
  for (long c : {1L, -7L}) {
    LaurentPolynomial constant = LaurentPolynomial::constant(dom, Rational(c));
    ++report.checks;
    if (!(delta(constant) == DegreeValue(Rational(0))))
      report.violations.push_back({AxiomViolation::Kind::ConstantNotZero, constant, constant,
                                   "delta(" + constant.str() + ") = " + delta(constant).str()});
  }

  for (const auto& [f, g] : samples) {
    DegreeValue df = delta(f), dg = delta(g);
    DegreeValue dsum = delta(f + g);
    DegreeValue bound = max(df, dg);
    ++report.checks;
    if (!(dsum <= bound))
      report.violations.push_back({AxiomViolation::Kind::SumBound, f, g,
                                   "delta(f+g) = " + dsum.str() + " > max = " + bound.str()});
    else if (dsum < bound && !(df == dg))
      report.violations.push_back({AxiomViolation::Kind::SumTieRule, f, g,
                                   "strict drop with delta(f) = " + df.str() +
                                       " != delta(g) = " + dg.str()});
    DegreeValue dprod = delta(poly_multiply(f, g));
    ++report.checks;
    if (!(dprod <= df + dg))
      report.violations.push_back({AxiomViolation::Kind::ProductBound, f, g,
                                   "delta(fg) = " + dprod.str() + " > sum = " + (df + dg).str()});
  }
  return report;
}

HomogeneityResult homogeneity_probe(const DegreeFn& delta, const LaurentPolynomial& f,
                                    unsigned k_max) {
  if (f.is_zero()) fail(Errc::DomainMismatch, "homogeneity probe needs a nonzero polynomial");
  DegreeValue base = delta(f);
  LaurentPolynomial power = f;
  for (unsigned k = 2; k <= k_max; ++k) {
    power = poly_multiply(power, f);
    if (!(delta(power) == base.scaled(Rational(static_cast<long>(k)))))
      return {false, k};
  }
  return {true, 0};
}

namespace {

bool rational_vector_less(const RationalVector& a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

std::vector<RationalVector> distinct_weights(const Subdegree& s) {
  std::vector<RationalVector> ws;
  for (const auto& p : s.parts) {
    bool seen = false;
    for (const auto& w : ws)
      if (w == p.weight) {
        seen = true;
        break;
      }
    if (!seen) ws.push_back(p.weight);
  }
  return ws;
}

}  // namespace

Subdegree minimal_presentation(const Subdegree& s) {
  std::vector<RationalVector> ws = distinct_weights(s);

  std::vector<RationalVector> kept;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::vector<RationalVector> rows;
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (j != i) rows.push_back(ws[i] - ws[j]);
    if (strict_cone_feasible(rows, s.domain)) kept.push_back(ws[i]);
  }
  if (kept.empty())
    fail(Errc::InternalInvariant, "minimal presentation emptied a subdegree");
  std::sort(kept.begin(), kept.end(), rational_vector_less);

  std::vector<WeightedDegree> parts;
  parts.reserve(kept.size());
  for (auto& w : kept) parts.emplace_back(s.domain, std::move(w));
  return Subdegree(std::move(parts));
}

ExtractionResult extract_semidegree(const Subdegree& s, const LaurentPolynomial& witness,
                                    const LaurentPolynomial& f, unsigned k_cap) {
  if (witness.is_zero() || f.is_zero())
    fail(Errc::DomainMismatch, "extraction needs nonzero witness and target");

  // The witness must single out exactly one part.
  std::vector<RationalVector> ws = distinct_weights(s);
  DegreeValue top = DegreeValue::neg_infinity();
  std::size_t winners = 0;
  for (const auto& w : ws) {
    DegreeValue v = eval_weighted(WeightedDegree(s.domain, w), witness);
    if (top < v) {
      top = v;
      winners = 1;
    } else if (v == top) {
      ++winners;
    }
  }
  if (winners != 1)
    fail(Errc::AmbiguousWitness, "witness ties " + std::to_string(winners) + " parts");

  std::vector<DegreeValue> seq;
  LaurentPolynomial wk = LaurentPolynomial::constant(s.domain, Rational(1));
  DegreeValue dwk(Rational(0));
  for (unsigned k = 0; k <= k_cap; ++k) {
    if (k) {
      wk = poly_multiply(wk, witness);
      dwk = eval_subdegree(s, wk);
    }
    DegreeValue a = eval_subdegree(s, poly_multiply(wk, f)) +
                    DegreeValue(Rational(0) - dwk.value());
    if (!seq.empty() && seq.back() < a)
      fail(Errc::InternalInvariant, "extraction sequence failed to be nonincreasing");
    seq.push_back(a);
    if (seq.size() >= 3 && seq[seq.size() - 2] == a && seq[seq.size() - 3] == a)
      return {a, true};
  }
  return {seq.back(), false};
}

NormalizationResult rees_normalize(const DegreeFn& delta, const LaurentPolynomial& f,
                                   unsigned m_cap) {
  if (f.is_zero()) return {DegreeValue::neg_infinity(), true};
  if (m_cap == 0) fail(Errc::ConfigError, "m_cap must be positive");

  std::vector<Rational> ratios;
  LaurentPolynomial power = LaurentPolynomial::constant(f.domain(), Rational(1));
  for (unsigned m = 1; m <= m_cap; ++m) {
    power = poly_multiply(power, f);
    ratios.push_back(delta(power).value() / Rational(static_cast<long>(m)));
  }
  Rational best = ratios.front();
  for (const auto& r : ratios) best = std::min(best, r);

  bool converged = false;
  for (unsigned m1 = 1; m1 <= m_cap && !converged; ++m1) {
    if (!(ratios[m1 - 1] == best)) continue;
    for (unsigned m2 = 2 * m1; m2 <= m_cap; m2 += m1)
      if (ratios[m2 - 1] == best) {
        converged = true;
        break;
      }
  }
  return {DegreeValue(best), converged};
}

Integer scale_to_integer(const std::vector<DegreeValue>& values) {
  Integer e = 1;
  for (const auto& v : values) e = lcm(e, v.value().den());
  return e;
}

std::size_t components_at_infinity(const Subdegree& s) {
  std::vector<RationalVector> negated;
  for (const auto& w : distinct_weights(s)) negated.push_back(scale(w, Rational(-1)));
  if (auto alpha = strict_cone_feasible(negated, s.domain))
    fail(Errc::NotNonNegative,
         "subdegree is negative at lattice point " + alpha->str());

  Subdegree m = minimal_presentation(s);
  bool has_zero_part = false;
  for (const auto& p : m.parts)
    if (is_zero(p.weight)) has_zero_part = true;
  return m.parts.size() - (has_zero_part ? 1 : 0);
}

DivisorAtInfinity divisor_at_infinity(const Subdegree& s) {
  Subdegree m = minimal_presentation(s);

  std::vector<DegreeValue> entries;
  for (const auto& p : m.parts)
    for (const auto& w : p.weight) entries.emplace_back(w);
  Integer e = scale_to_integer(entries);

  DivisorAtInfinity div{e, m, {}};
  for (std::size_t j = 0; j < m.parts.size(); ++j) {
    const auto& w = m.parts[j].weight;
    // The part must attain positive values somewhere on the domain lattice.
    if (!strict_cone_feasible({w}, m.domain))
      fail(Errc::DegeneratePart, "part " + std::to_string(j) + " never takes positive values");
    LatticeVector scaled_w(m.domain.n);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Rational x = w[i] * Rational(e);
      if (!x.is_integer())
        fail(Errc::InternalInvariant, "integer scaling failed to clear a weight entry");
      scaled_w[i] = x.num();
    }
    Integer d = scaled_w.content();
    div.components.push_back({j, d, Rational(Integer(1), d)});
  }
  return div;
}

}  // namespace deginf
