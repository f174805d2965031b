#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace nsl {

// Arbitrary-precision rational number, kept in lowest terms with positive
// denominator (GMP canonical form).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);

  // Accepts "p", "p/q", with optional leading sign. Throws std::invalid_argument.
  static Rational parse(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

private:
  explicit Rational(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// True iff r is the square of a rational (0 counts, negatives never).
bool is_rational_square(const Rational& r);

// Exact square root when r is a rational square.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace nsl
