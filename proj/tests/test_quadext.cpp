#include <doctest.h>

#include <nsl/quadext.hpp>
#include <nsl/rng.hpp>

using nsl::QuadExt;
using nsl::Rational;

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), Rational(4)), std::domain_error);
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), Rational(0)), std::domain_error);
  QuadExt x(Rational(1), Rational(2), Rational(-1));
  CHECK(x.a() == Rational(1));
  CHECK(x.b() == Rational(2));
  CHECK(x.m() == Rational(-1));
}

TEST_CASE("rational embedding mixes with any discriminant") {
  QuadExt r = QuadExt::from_rational(Rational(3, 2));
  QuadExt x(Rational(1), Rational(1), Rational(2));
  QuadExt y = r + x;
  CHECK(y.a() == Rational(5, 2));
  CHECK(y.b() == Rational(1));
  CHECK(y.m() == Rational(2));
  CHECK(r.is_rational());
  CHECK_FALSE(x.is_rational());

  QuadExt z(Rational(0), Rational(1), Rational(3));
  CHECK_THROWS_AS((void)(x + z), nsl::FieldMixError);
  CHECK_THROWS_AS((void)(x * z), nsl::FieldMixError);
}

TEST_CASE("arithmetic in Q(sqrt(2))") {
  Rational m(2);
  QuadExt x(Rational(1), Rational(1), m);   // 1 + s
  QuadExt y(Rational(2), Rational(-3), m);  // 2 - 3s
  QuadExt p = x * y;                        // 2 - 3s + 2s - 3*2 = -4 - s
  CHECK(p.a() == Rational(-4));
  CHECK(p.b() == Rational(-1));
  CHECK(x.conj() == QuadExt(Rational(1), Rational(-1), m));
  CHECK(x.norm() == Rational(-1));
  CHECK(x.inverse() == QuadExt(Rational(-1), Rational(1), m));
  CHECK(x * x.inverse() == QuadExt::from_rational(Rational(1)));
  CHECK_THROWS_AS(QuadExt().inverse(), std::domain_error);
}

TEST_CASE("sign in a real quadratic field") {
  Rational m(2);
  auto q = [&](long a, long b) { return QuadExt(Rational(a), Rational(b), m); };
  CHECK(nsl::qsign(q(3, -2)) == 1);    // 3 - 2*sqrt(2) > 0
  CHECK(nsl::qsign(q(-3, 2)) == -1);
  CHECK(nsl::qsign(q(1, -1)) == -1);   // 1 < sqrt(2)
  CHECK(nsl::qsign(q(-1, 1)) == 1);
  CHECK(nsl::qsign(q(5, 2)) == 1);
  CHECK(nsl::qsign(q(-5, -2)) == -1);
  CHECK(nsl::qsign(q(0, 1)) == 1);
  CHECK(nsl::qsign(q(0, -3)) == -1);
  CHECK(nsl::qsign(q(0, 0)) == 0);
  CHECK(nsl::qsign(QuadExt::from_rational(Rational(-7))) == -1);
  // Imaginary field: only rational elements have a sign.
  QuadExt im(Rational(0), Rational(1), Rational(-1));
  CHECK_THROWS_AS(nsl::qsign(im), std::domain_error);
  CHECK(nsl::qsign(QuadExt(Rational(4), Rational(0), Rational(-1))) == 1);
}

TEST_CASE("field laws on random values") {
  nsl::SplitMix64 rng(7);
  Rational m(5);
  auto draw = [&]() {
    return QuadExt(Rational(rng.range(-9, 9), rng.range(1, 4)),
                   Rational(rng.range(-9, 9), rng.range(1, 4)), m);
  };
  for (int i = 0; i < 1000; ++i) {
    QuadExt a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.norm() == (a * a.conj()).a());
    if (!a.is_zero()) CHECK(a * a.inverse() == QuadExt::from_rational(Rational(1)));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
