#include "deginf/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace deginf {

RingDomain laurent_domain(std::size_t n) { return RingDomain{n, RingMode::Laurent}; }
RingDomain polynomial_domain(std::size_t n) { return RingDomain{n, RingMode::Polynomial}; }

LaurentPolynomial LaurentPolynomial::constant(RingDomain domain, const Rational& c) {
  LaurentPolynomial p(domain);
  if (!c.is_zero()) p.terms_.emplace(LatticeVector(domain.n), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(RingDomain domain, const LatticeVector& exp,
                                              const Rational& coef) {
  LaurentPolynomial p(domain);
  p.add_term(exp, coef);
  return p;
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

void LaurentPolynomial::check_exponent(const LatticeVector& e) const {
  if (!dom_.contains(e))
    fail(Errc::DomainMismatch, "exponent " + e.str() + " outside the ring domain");
}

void LaurentPolynomial::add_term(const LatticeVector& exp, const Rational& c) {
  if (c.is_zero()) return;
  check_exponent(exp);
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (dom_ != o.dom_) fail(Errc::DomainMismatch, "adding polynomials from different rings");
  LaurentPolynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
  if (c.is_zero()) return zero(dom_);
  LaurentPolynomial r(*this);
  for (auto& [e, coef] : r.terms_) coef *= c;
  return r;
}

LaurentPolynomial poly_multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.domain() != g.domain())
    fail(Errc::DomainMismatch, "multiplying polynomials from different rings");
  LaurentPolynomial r(f.domain());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial acc = constant(dom_, Rational(1));
  LaurentPolynomial base(*this);
  while (k) {
    if (k & 1u) acc = poly_multiply(acc, base);
    k >>= 1u;
    if (k) base = poly_multiply(base, base);
  }
  return acc;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first: walk the graded-lex map backwards.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else if (a.sign() < 0) {
      os << " - ";
      a = -a;
    } else {
      os << " + ";
    }
    bool printed_coef = false;
    if (e.is_zero() || a != Rational(1)) {
      os << a.str();
      printed_coef = true;
    }
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (sgn(e[i]) == 0) continue;
      if (printed_coef) os << "*";
      printed_coef = true;
      os << "x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i].get_str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  char take() {
    skip_ws();
    return s[i++];
  }

  std::string number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail(Errc::ParseError, "expected number at position " + std::to_string(start));
    return s.substr(start, i - start);
  }

  // Signed integer for exponents.
  Integer signed_int() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    Integer v{number()};
    return neg ? Integer(-v) : v;
  }
};

// Variable index from "x1".."xn" or the aliases x/y/z when n <= 3.
std::size_t variable_index(Lexer& lx, std::size_t n) {
  char c = lx.take();
  if (c == 'x' && lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
    Integer k{lx.number()};
    if (k < 1 || k > static_cast<long>(n))
      fail(Errc::ParseError, "variable index out of range in polynomial text");
    return k.get_ui() - 1;
  }
  std::size_t idx;
  switch (c) {
    case 'x': idx = 0; break;
    case 'y': idx = 1; break;
    case 'z': idx = 2; break;
    default: fail(Errc::ParseError, std::string("unexpected character '") + c + "' in polynomial");
  }
  if (idx >= n) fail(Errc::ParseError, "variable outside ring dimension in polynomial text");
  return idx;
}

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text, RingDomain domain) {
  LaurentPolynomial p(domain);
  Lexer lx{text};
  if (lx.eof()) fail(Errc::ParseError, "empty polynomial text");

  bool expect_term = true;
  int pending_sign = +1;
  while (!lx.eof()) {
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      if (expect_term) {
        pending_sign = (c == '-') ? -pending_sign : pending_sign;
      } else {
        pending_sign = (c == '-') ? -1 : +1;
        expect_term = true;
      }
      continue;
    }
    if (!expect_term) fail(Errc::ParseError, "missing +/- between terms");

    Rational coef(pending_sign);
    LatticeVector exp(domain.n);
    bool saw_factor = false;
    bool want_factor = true;
    while (!lx.eof()) {
      char t = lx.peek();
      if (t == '*') {
        if (want_factor) fail(Errc::ParseError, "dangling '*' in polynomial text");
        lx.take();
        want_factor = true;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(t))) {
        if (!want_factor) break;
        std::string num = lx.number();
        std::string lit = num;
        if (!lx.eof() && lx.peek() == '/') {
          lx.take();
          lit += "/" + lx.number();
        }
        coef *= Rational::parse(lit);
        saw_factor = true;
        want_factor = false;
        continue;
      }
      if (t == 'x' || t == 'y' || t == 'z') {
        if (!want_factor) break;
        std::size_t idx = variable_index(lx, domain.n);
        Integer e = 1;
        if (!lx.eof() && lx.peek() == '^') {
          lx.take();
          e = lx.signed_int();
        }
        exp[idx] += e;
        saw_factor = true;
        want_factor = false;
        continue;
      }
      break;
    }
    if (!saw_factor) fail(Errc::ParseError, "empty term in polynomial text");
    if (domain.mode == RingMode::Polynomial && !exp.all_nonnegative())
      fail(Errc::DomainMismatch, "negative exponent outside Laurent mode");
    p.add_term(exp, coef);
    expect_term = false;
    pending_sign = +1;
  }
  if (expect_term) fail(Errc::ParseError, "trailing +/- in polynomial text");
  return p;
}

}  // namespace deginf
