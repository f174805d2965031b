#include "nsl/quadext.hpp"

namespace nsl {

QuadExt::QuadExt(Rational a, Rational b, Rational m)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  if (m_.is_zero() || is_rational_square(m_))
    throw std::domain_error("QuadExt: m must be nonzero and not a rational square");
}

Rational QuadExt::merged_m(const QuadExt& x, const QuadExt& y) {
  if (!x.b_.is_zero() && !y.b_.is_zero() && !(x.m_ == y.m_)) throw FieldMixError();
  return x.b_.is_zero() ? (y.b_.is_zero() ? x.m_ : y.m_) : x.m_;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, QuadExt::merged_m(x, y));
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, QuadExt::merged_m(x, y));
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  Rational m = QuadExt::merged_m(x, y);
  return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
  Rational n = norm();
  return QuadExt(a_ / n, -b_ / n, m_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
  s += b_.str() + "*sqrt(" + m_.str() + ")";
  return s;
}

int qsign(const QuadExt& x) {
  if (x.b().is_zero()) return x.a().sign();
  if (x.m().sign() <= 0) throw std::domain_error("qsign: requires m > 0");
  int sa = x.a().sign(), sb = x.b().sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare |a| with |b| sqrt(m) via squares
  int c = (x.a() * x.a() <=> x.b() * x.b() * x.m()) == std::strong_ordering::less ? -1
        : (x.a() * x.a() == x.b() * x.b() * x.m()) ? 0
                                                   : 1;
  if (c == 0) return 0;
  // the larger magnitude decides
  return c > 0 ? sa : sb;
}

}  // namespace nsl
