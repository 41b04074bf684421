#include "deginf/cone.hpp"

#include <algorithm>

namespace deginf {

namespace {

// Eliminates the last variable; `lower/upper/free` collect the constraints by
// the sign of its coefficient so the witness can be reconstructed later.
struct EliminationStage {
  std::vector<LinearConstraint> lower;  // positive coefficient: x >= (rhs - rest)/a
  std::vector<LinearConstraint> upper;  // negative coefficient: x <= (rhs - rest)/a
};

}  // namespace

std::optional<RationalVector> fm_feasible(std::vector<LinearConstraint> constraints,
                                          std::size_t num_vars) {
  std::vector<EliminationStage> stages(num_vars);

  for (std::size_t var = num_vars; var-- > 0;) {
    EliminationStage& stage = stages[var];
    std::vector<LinearConstraint> remaining;
    for (auto& c : constraints) {
      int s = c.coeffs[var].sign();
      if (s > 0) stage.lower.push_back(c);
      else if (s < 0) stage.upper.push_back(c);
      else remaining.push_back(std::move(c));
    }
    // Pairwise combinations cancel the variable exactly.
    for (const auto& lo : stage.lower)
      for (const auto& up : stage.upper) {
        Rational a = lo.coeffs[var];        // > 0
        Rational b = -(up.coeffs[var]);     // > 0
        LinearConstraint combined;
        combined.coeffs.resize(var);
        for (std::size_t j = 0; j < var; ++j)
          combined.coeffs[j] = lo.coeffs[j] * b + up.coeffs[j] * a;
        combined.rhs = lo.rhs * b + up.rhs * a;
        remaining.push_back(std::move(combined));
      }
    for (auto& c : remaining) c.coeffs.resize(var);
    constraints = std::move(remaining);
  }

  for (const auto& c : constraints)
    if (c.rhs.sign() > 0) return std::nullopt;  // 0 >= rhs failed

  // Back-substitute, picking any value inside the (closed) admissible interval.
  RationalVector x(num_vars);
  for (std::size_t var = 0; var < num_vars; ++var) {
    const EliminationStage& stage = stages[var];
    std::optional<Rational> lo, hi;
    auto partial = [&](const LinearConstraint& c) {
      Rational rest = c.rhs;
      for (std::size_t j = 0; j < var; ++j) rest -= c.coeffs[j] * x[j];
      return rest / c.coeffs[var];
    };
    for (const auto& c : stage.lower) {
      Rational bound = partial(c);
      if (!lo || bound > *lo) lo = bound;
    }
    for (const auto& c : stage.upper) {
      Rational bound = partial(c);
      if (!hi || bound < *hi) hi = bound;
    }
    if (lo && hi && *lo > *hi)
      fail(Errc::InternalInvariant, "FM back-substitution hit an empty interval");
    x[var] = lo ? *lo : (hi ? *hi : Rational(0));
  }
  return x;
}

std::optional<LatticeVector> strict_cone_feasible(const std::vector<RationalVector>& strict_rows,
                                                  const RingDomain& domain) {
  const std::size_t n = domain.n;
  for (const auto& r : strict_rows)
    if (r.size() != n) fail(Errc::DomainMismatch, "constraint row of wrong dimension");

  if (strict_rows.empty()) {
    // Vacuous system: any nonzero lattice point of the domain will do.
    LatticeVector e(n);
    e[0] = 1;
    return e;
  }

  // Variables (alpha_1..alpha_n, t); homogenized system <r, alpha> - t >= 0, t >= 1.
  std::vector<LinearConstraint> cs;
  for (const auto& r : strict_rows) {
    LinearConstraint c;
    c.coeffs = r;
    c.coeffs.push_back(Rational(-1));
    cs.push_back(std::move(c));
  }
  LinearConstraint t_pos;
  t_pos.coeffs.assign(n + 1, Rational(0));
  t_pos.coeffs[n] = Rational(1);
  t_pos.rhs = Rational(1);
  cs.push_back(std::move(t_pos));
  if (domain.mode == RingMode::Polynomial)
    for (std::size_t i = 0; i < n; ++i) {
      LinearConstraint nn;
      nn.coeffs.assign(n + 1, Rational(0));
      nn.coeffs[i] = Rational(1);
      cs.push_back(std::move(nn));
    }

  auto point = fm_feasible(std::move(cs), n + 1);
  if (!point) return std::nullopt;

  RationalVector alpha(point->begin(), point->begin() + n);
  if (is_zero(alpha)) fail(Errc::InternalInvariant, "strict witness degenerated to zero");
  return primitive_vector(alpha).vector;
}

std::optional<LatticeVector> nonneg_cone_ray_2d(const std::vector<RationalVector>& rows) {
  auto feasible = [&](const LatticeVector& a) {
    if (a.is_zero() || !a.all_nonnegative()) return false;
    for (const auto& r : rows)
      if (dot(r, a).sign() < 0) return false;
    return true;
  };

  std::vector<LatticeVector> candidates = {LatticeVector{1, 0}, LatticeVector{0, 1}};
  for (const auto& r : rows) {
    if (is_zero(r)) continue;
    auto p = primitive_vector(r).vector;
    LatticeVector rot{0, 0};
    rot[0] = -p[1];
    rot[1] = p[0];
    candidates.push_back(rot);
    candidates.push_back(-rot);
  }
  for (const auto& c : candidates)
    if (feasible(c)) return c.primitive();
  return std::nullopt;
}

bool nonpositive_cone_has_ray(const std::vector<RationalVector>& rows, std::size_t num_vars) {
  // d != 0 is normalized by forcing one coordinate to +-1.
  for (std::size_t i = 0; i < num_vars; ++i) {
    for (int s : {+1, -1}) {
      std::vector<LinearConstraint> cs;
      for (const auto& r : rows) {
        LinearConstraint c;
        c.coeffs.reserve(num_vars);
        for (const auto& x : r) c.coeffs.push_back(-x);  // <r, d> <= 0
        cs.push_back(std::move(c));
      }
      LinearConstraint pin;
      pin.coeffs.assign(num_vars, Rational(0));
      pin.coeffs[i] = Rational(s);
      pin.rhs = Rational(1);
      cs.push_back(std::move(pin));
      if (fm_feasible(std::move(cs), num_vars)) return true;
    }
  }
  return false;
}

}  // namespace deginf
