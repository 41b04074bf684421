#include "deginf/lattice.hpp"

#include <ostream>
#include <sstream>

namespace deginf {

LatticeVector::LatticeVector(std::initializer_list<long> xs) {
  e_.reserve(xs.size());
  for (long x : xs) e_.emplace_back(x);
}

bool LatticeVector::is_zero() const {
  for (const auto& x : e_)
    if (sgn(x) != 0) return false;
  return true;
}

bool LatticeVector::all_nonnegative() const {
  for (const auto& x : e_)
    if (sgn(x) < 0) return false;
  return true;
}

bool LatticeVector::all_positive() const {
  for (const auto& x : e_)
    if (sgn(x) <= 0) return false;
  return true;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  LatticeVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  LatticeVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

LatticeVector LatticeVector::scaled(const Integer& k) const {
  LatticeVector r(*this);
  for (auto& x : r.e_) x *= k;
  return r;
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& x : e_) g = deginf::gcd(g, x);
  return g;
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (sgn(g) == 0) return *this;
  LatticeVector r(*this);
  for (auto& x : r.e_) x /= g;
  return r;
}

std::strong_ordering LatticeVector::operator<=>(const LatticeVector& o) const {
  if (e_.size() != o.e_.size())
    return e_.size() < o.e_.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    int c = cmp(e_[i], o.e_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  return os << ')';
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& w, const LatticeVector& a) {
  Rational s;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * Rational(a[i]);
  return s;
}

Rational dot(const RationalVector& w, const RationalVector& a) {
  Rational s;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
  return s;
}

RationalVector rational_vector(const LatticeVector& v) {
  RationalVector r;
  r.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r.emplace_back(v[i]);
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RationalVector scale(const RationalVector& v, const Rational& c) {
  RationalVector r(v);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool graded_lex_less(const LatticeVector& a, const LatticeVector& b) {
  Integer da = 0, db = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) da += a[i];
  for (std::size_t i = 0; i < b.dim(); ++i) db += b[i];
  int c = cmp(da, db);
  if (c != 0) return c < 0;
  return a < b;
}

PrimitiveResult primitive_vector(const RationalVector& v) {
  if (v.empty() || is_zero(v)) fail(Errc::ZeroVector, "primitive_vector of zero vector");
  Integer den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, x.den());
  std::vector<Integer> cleared;
  cleared.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer e = x.num() * (den_lcm / x.den());
    g = gcd(g, e);
    cleared.push_back(std::move(e));
  }
  for (auto& e : cleared) e /= g;
  // v = (g / den_lcm) * p exactly, with g, den_lcm > 0.
  return {LatticeVector(std::move(cleared)), Rational(g, den_lcm)};
}

}  // namespace deginf
