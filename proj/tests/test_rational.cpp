#include <doctest.h>

#include <nsl/rational.hpp>
#include <nsl/rng.hpp>

#include <sstream>

using nsl::Rational;

TEST_CASE("construction reduces to lowest terms") {
  Rational r(6, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  Rational s(-6, -4);
  CHECK(s.num() == 3);
  CHECK(s.den() == 2);
  Rational t(5, -10);
  CHECK(t.num() == -1);
  CHECK(t.den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing and printing round-trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(0).str() == "0");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("2/-3"), std::invalid_argument);

  std::ostringstream os;
  os << Rational(-22, 7);
  CHECK(os.str() == "-22/7");
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a.inverse() == Rational(2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 9).sign() == 1);
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("square detection") {
  CHECK(nsl::is_rational_square(Rational(4, 9)));
  CHECK(nsl::is_rational_square(Rational(0)));
  CHECK(nsl::is_rational_square(Rational(1)));
  CHECK_FALSE(nsl::is_rational_square(Rational(2)));
  CHECK_FALSE(nsl::is_rational_square(Rational(-4)));
  CHECK_FALSE(nsl::is_rational_square(Rational(1900, 3)));
  CHECK_FALSE(nsl::is_rational_square(Rational(57, 100)));

  CHECK(nsl::exact_sqrt(Rational(4, 9)) == Rational(2, 3));
  CHECK(nsl::exact_sqrt(Rational(0)) == Rational(0));
  CHECK_FALSE(nsl::exact_sqrt(Rational(2)).has_value());
}

TEST_CASE("field laws on random values") {
  nsl::SplitMix64 rng(42);
  auto draw = [&]() {
    Rational r(rng.range(-50, 50), rng.range(1, 20));
    return r;
  };
  for (int i = 0; i < 1000; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
