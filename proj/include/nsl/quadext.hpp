#pragma once

#include "nsl/rational.hpp"

#include <stdexcept>
#include <string>

namespace nsl {

// Two elements with b != 0 over distinct m cannot be combined.
struct FieldMixError : std::domain_error {
  FieldMixError() : std::domain_error("QuadExt: mixing distinct quadratic fields") {}
};

// Element a + b*theta of the quadratic field Q(theta), theta^2 = m, where m is
// a nonzero rational that is not a square. Elements with b == 0 embed Q and
// combine freely with any m; the ambient m of the other operand wins.
class QuadExt {
public:
  QuadExt() : a_(0), b_(0), m_(-1) {}
  explicit QuadExt(long v) : a_(v), b_(0), m_(-1) {}
  QuadExt(Rational a, Rational b, Rational m);
  static QuadExt from_rational(const Rational& r) { return QuadExt(r, 0, Rational(-1)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& m() const { return m_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conj() const { return QuadExt(a_, -b_, m_); }
  // a^2 - b^2 m; zero only for the zero element since m is not a square.
  Rational norm() const { return a_ * a_ - b_ * b_ * m_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  QuadExt inverse() const;

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (!(x.a_ == y.a_ && x.b_ == y.b_)) return false;
    return x.b_.is_zero() || x.m_ == y.m_;
  }

  std::string str() const;

private:
  static Rational merged_m(const QuadExt& x, const QuadExt& y);
  Rational a_, b_, m_;
};

// Exact sign of the real number a + b*sqrt(m) for m > 0 (or of a rational
// element regardless of m). Decided by sign cases and comparing a^2 to b^2 m.
int qsign(const QuadExt& x);

}  // namespace nsl
