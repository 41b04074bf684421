// Independent brute-force oracles for the unit tests. These deliberately
// avoid the library's own span/supremum/gcd code paths so that agreement is
// meaningful evidence.
#ifndef DEGINF_TESTS_ORACLES_HPP
#define DEGINF_TESTS_ORACLES_HPP

#include <deginf/degree.hpp>
#include <deginf/lattice.hpp>

#include <map>
#include <optional>
#include <vector>

namespace oracles {

using namespace deginf;

/// Filtration level of f by naive enumeration: spans of all generator
/// products of total weight <= d over the union of their supports, membership
/// by a from-scratch Gaussian elimination. No exponent box involved.
inline std::optional<unsigned> filtration_level_brute(
    const std::vector<std::pair<LaurentPolynomial, unsigned>>& generators,
    const LaurentPolynomial& f, unsigned d_max) {
  std::vector<std::pair<unsigned, LaurentPolynomial>> products;
  products.emplace_back(0u, LaurentPolynomial::constant(f.domain(), Rational(1)));
  for (std::size_t i = 0; i < products.size(); ++i) {
    auto [w, p] = products[i];
    for (const auto& [g, gw] : generators)
      if (w + gw <= d_max) products.emplace_back(w + gw, poly_multiply(p, g));
  }

  for (unsigned d = 0; d <= d_max; ++d) {
    // Collect the coordinate set of this level.
    std::map<LatticeVector, std::size_t> index;
    auto touch = [&](const LaurentPolynomial& p) {
      for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
    };
    touch(f);
    for (const auto& [w, p] : products)
      if (w <= d) touch(p);
    std::size_t next = 0;
    for (auto& [e, i] : index) i = next++;

    std::vector<std::vector<Rational>> rows;
    for (const auto& [w, p] : products) {
      if (w > d) continue;
      std::vector<Rational> row(index.size());
      for (const auto& [e, c] : p.terms()) row[index.at(e)] = c;
      rows.push_back(std::move(row));
    }
    std::vector<Rational> target(index.size());
    for (const auto& [e, c] : f.terms()) target[index.at(e)] = c;

    // From-scratch elimination: triangularize rows, then reduce the target.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < index.size() && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col].is_zero()) continue;
        Rational fac = rows[r][col] / rows[rank][col];
        for (std::size_t j = col; j < index.size(); ++j) rows[r][j] -= fac * rows[rank][j];
      }
      if (!target[col].is_zero()) {
        Rational fac = target[col] / rows[rank][col];
        for (std::size_t j = col; j < index.size(); ++j) target[j] -= fac * rows[rank][j];
      }
      ++rank;
    }
    bool member = true;
    for (const auto& x : target)
      if (!x.is_zero()) member = false;
    if (member) return d;
  }
  return std::nullopt;
}

/// sup over alpha in N^2 \ {0}, |alpha| <= cap, of <vj, alpha> / <vi, alpha>.
inline Rational linking_sup_brute(const LatticeVector& vi, const LatticeVector& vj, long cap) {
  std::optional<Rational> best;
  for (long a = 0; a <= cap; ++a)
    for (long b = 0; b <= cap - a; ++b) {
      if (a == 0 && b == 0) continue;
      Rational num(vj[0] * a + vj[1] * b);
      Rational den(vi[0] * a + vi[1] * b);
      Rational ratio = num / den;
      if (!best || ratio > *best) best = ratio;
    }
  return *best;
}

/// sup of <w_pole, M alpha> / max_parts <w, alpha> over the lattice cone.
inline Rational pullback_sup_brute(const std::vector<RationalVector>& delta_weights,
                                   const RationalVector& pole, long m00, long m01, long m10,
                                   long m11, long cap, bool laurent) {
  std::optional<Rational> best;
  long lo = laurent ? -cap : 0;
  for (long a = lo; a <= cap; ++a)
    for (long b = lo; b <= cap; ++b) {
      if (a == 0 && b == 0) continue;
      LatticeVector alpha{a, b};
      Rational den = dot(delta_weights.front(), alpha);
      for (std::size_t i = 1; i < delta_weights.size(); ++i)
        den = std::max(den, dot(delta_weights[i], alpha));
      if (den.sign() <= 0) continue;
      LatticeVector image{m00 * a + m01 * b, m10 * a + m11 * b};
      Rational ratio = dot(pole, image) / den;
      if (!best || ratio > *best) best = ratio;
    }
  return *best;
}

/// gcd of the positive values of an integer weight on the domain lattice,
/// sampled over |alpha| <= cap.
inline Integer gcd_positive_values_brute(const LatticeVector& weight, bool laurent, long cap) {
  Integer g = 0;
  long lo = laurent ? -cap : 0;
  std::vector<long> cursor(weight.dim(), lo);
  while (true) {
    LatticeVector alpha(weight.dim());
    long abs_sum = 0;
    for (std::size_t i = 0; i < cursor.size(); ++i) {
      alpha[i] = cursor[i];
      abs_sum += cursor[i] < 0 ? -cursor[i] : cursor[i];
    }
    if (abs_sum <= cap) {
      Integer v = dot(weight, alpha);
      if (sgn(v) > 0) g = gcd(g, v);
    }
    std::size_t i = cursor.size();
    bool done = true;
    while (i-- > 0) {
      if (cursor[i] < cap) {
        ++cursor[i];
        done = false;
        break;
      }
      cursor[i] = lo;
    }
    if (done) return g;
  }
}

/// Decomposability of alpha as a sum of the given degree-tagged points with
/// total degree <= budget (independent of the semigroup implementation).
inline bool decomposable_brute(const LatticeVector& alpha, unsigned budget,
                               const std::vector<std::pair<LatticeVector, unsigned>>& pool,
                               std::size_t from = 0) {
  if (alpha.is_zero()) return true;
  for (std::size_t i = from; i < pool.size(); ++i) {
    const auto& [beta, deg] = pool[i];
    if (deg > budget) continue;
    bool fits = true;
    for (std::size_t c = 0; c < alpha.dim(); ++c)
      if (alpha[c] < beta[c]) fits = false;  // N^2 points only
    if (!fits) continue;
    if (decomposable_brute(alpha - beta, budget - deg, pool, i)) return true;
  }
  return false;
}

}  // namespace oracles

#endif
