#include "nsl/rational.hpp"

#include <cctype>
#include <ostream>

namespace nsl {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
}

Rational Rational::parse(const std::string& s) {
  // strict shape check; mpq_set_str is more permissive than we want
  std::size_t i = 0;
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p > start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits(i)) throw std::invalid_argument("Rational::parse: '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("Rational::parse: '" + s + "'");
    ++i;
    if (!digits(i) || i != s.size())
      throw std::invalid_argument("Rational::parse: '" + s + "'");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: '" + s + "'");
  if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(1) / *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_rational_square(const Rational& r) {
  int s = r.sign();
  if (s < 0) return false;
  if (s == 0) return true;
  mpz_class n = r.num(), d = r.den();
  return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (!is_rational_square(r)) return std::nullopt;
  mpz_class n = r.num(), d = r.den(), sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

}  // namespace nsl
