#include <doctest.h>

#include "ivlab/error.hpp"
#include "ivlab/polynomial.hpp"

using namespace ivlab;

TEST_SUITE("polynomial") {
  TEST_CASE("parse, degree and printing") {
    const Polynomial p = Polynomial::parse("-12, 0, 1, 1");
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "x^3 + x^2 - 12");
    CHECK(p.to_csv() == "-12, 0, 1, 1");
    CHECK(Polynomial::parse("0, 0").is_zero());
    CHECK(Polynomial::parse("0, 0").degree() == -1);
    CHECK(Polynomial::parse("1, -1").to_string() == "-x + 1");
    CHECK(Polynomial::parse("-2.25, 0, 1").to_string() == "x^2 - 2.25");
    CHECK(Polynomial::parse("1/3, 1").to_csv() == "1/3, 1");
    CHECK_THROWS_AS(Polynomial::parse("1,,2"), Error);
  }

  TEST_CASE("exact evaluation") {
    const Polynomial p = Polynomial::parse("-4, 0, 1");
    CHECK(eval(p, Rational(5, 2)) == Rational(9, 4));
    CHECK(eval(Polynomial::parse("-12, 0, 1, 1"), Rational(13, 10)) == parse_decimal("-8.113"));
    CHECK(eval(Polynomial(), Rational(3)) == 0);
    // Non-integral coefficients exercise the common-denominator path.
    const Polynomial q = Polynomial::parse("1/3, -1/2, 2/7");
    const Rational x(5, 11);
    CHECK(q(x) == Rational(1, 3) - Rational(1, 2) * x + Rational(2, 7) * x * x);
  }

  TEST_CASE("derivative") {
    const Polynomial p = Polynomial::parse("-12, 0, 1, 1");
    CHECK(p.derivative() == Polynomial::parse("0, 2, 3"));
    CHECK(p.derivative().derivative() == Polynomial::parse("2, 6"));
    CHECK(Polynomial::parse("5").derivative().is_zero());
  }

  TEST_CASE("product") {
    const Polynomial p = Polynomial{Rational(-1), Rational(1)} * Polynomial{Rational(1), Rational(1)};
    CHECK(p == Polynomial::parse("-1, 0, 1"));
  }

  TEST_CASE("sign_at agrees with exact evaluation") {
    const Polynomial p = Polynomial::parse("-8, 0, 0, 1");
    CHECK(p.sign_at(Rational(2)) == 0);
    CHECK(p.sign_at(Rational(199, 100)) == -1);
    CHECK(p.sign_at(Rational(201, 100)) == 1);
    // Distance 10^-300 from the zero needs high precision to resolve.
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 300);
    CHECK(p.sign_at(Rational(2) + Rational(mpz_class(1), den)) == 1);
    CHECK(p.sign_at(Rational(2) - Rational(mpz_class(1), den)) == -1);
  }

  TEST_CASE("interval Horner on known values") {
    const Polynomial df = Polynomial::parse("0, 2, 3");
    CHECK(interval_eval(df, parse_interval("[0.5, 2.1]")) == parse_interval("[1.75, 17.43]"));
    CHECK(interval_eval(Polynomial::parse("-4, 0, 1"), Interval<Rational>::point(Rational(5, 2))).is_point());
  }

  TEST_CASE("format_exact") {
    CHECK(format_exact(ratio(5936, 1000)) == "5.936");
    CHECK(format_exact(Rational(1, 3)) == "1/3");
    CHECK(format_exact(Rational(-3, 4)) == "-0.75");
    CHECK(format_exact(Rational(0)) == "0");
  }
}
