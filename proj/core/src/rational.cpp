#include "deginf/rational.hpp"

#include <cctype>
#include <ostream>

namespace deginf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::Singular: return "Singular";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::DegeneratePolytope: return "DegeneratePolytope";
    case Errc::OriginNotInterior: return "OriginNotInterior";
    case Errc::Unbounded: return "Unbounded";
    case Errc::InvalidPolygon: return "InvalidPolygon";
    case Errc::InvalidFan: return "InvalidFan";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotProjective: return "NotProjective";
    case Errc::NotDominant: return "NotDominant";
    case Errc::AmbiguousWitness: return "AmbiguousWitness";
    case Errc::NotNonNegative: return "NotNonNegative";
    case Errc::DegeneratePart: return "DegeneratePart";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BoxExceeded: return "BoxExceeded";
    case Errc::ConfigError: return "ConfigError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) fail(Errc::ParseError, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::ParseError, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(Errc::ParseError, "reciprocal of zero");
  return from_mpq(mpq_class(1) / v_);
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");

  auto is_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) fail(Errc::ParseError, "bad rational literal '" + text + "'");
    return Rational(Integer(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) fail(Errc::ParseError, "bad rational literal '" + text + "'");
  Integer den{q};
  if (sgn(den) == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
  return Rational(Integer(p), den);
}

std::string Rational::str() const {
  return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace deginf
