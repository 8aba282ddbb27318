#include <doctest.h>

#include "ivlab/error.hpp"
#include "ivlab/scalar.hpp"

using namespace ivlab;

TEST_SUITE("scalar") {
  TEST_CASE("parse_decimal reads decimals, exponents, fractions and unicode minus") {
    CHECK(parse_decimal("1.3") == Rational(13, 10));
    CHECK(parse_decimal("-8.113") == Rational(-8113, 1000));
    CHECK(parse_decimal("2.5E3") == Rational(2500));
    CHECK(parse_decimal("13/10") == Rational(13, 10));
    CHECK(parse_decimal("−2") == Rational(-2));
    CHECK(parse_decimal(" 0.5 ") == Rational(1, 2));
    Rational tiny = parse_decimal("1e-50");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 50);
    CHECK(tiny == Rational(mpz_class(1), den));
  }

  TEST_CASE("parse_decimal rejects garbage") {
    for (const char* bad : {"", "abc", "1.2.3", "1/0", "--1", "1e"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_decimal(bad), Error);
    }
  }

  TEST_CASE("format_decimal rounds in the requested direction") {
    const Rational third(1, 3);
    CHECK(format_decimal(third, 5, Round::Down) == "0.33333");
    CHECK(format_decimal(third, 5, Round::Up) == "0.33334");
    CHECK(format_decimal(Rational(-1, 3), 5, Round::Down) == "-0.33334");
    CHECK(format_decimal(Rational(-1, 3), 5, Round::Up) == "-0.33333");
    CHECK(format_decimal(Rational(2), 25) == "2");
    CHECK(format_decimal(ratio(5936, 1000), 25) == "5.936");
    CHECK(format_decimal(Rational(0), 10) == "0");
  }

  TEST_CASE("format_decimal brackets the value") {
    const Rational q(22343, 11016);
    const Rational lo = parse_decimal(format_decimal(q, 12, Round::Down));
    const Rational hi = parse_decimal(format_decimal(q, 12, Round::Up));
    CHECK(lo <= q);
    CHECK(q <= hi);
    CHECK(hi - lo <= Rational(mpz_class(1), mpz_class("100000000000")));
  }

  TEST_CASE("BigFloat rounding is directed") {
    WorkingPrecision precision(30);
    const Rational tenth(1, 10);
    const BigFloat down(tenth, Round::Down);
    const BigFloat up(tenth, Round::Up);
    CHECK(to_rational(down) < tenth);
    CHECK(tenth < to_rational(up));
    CHECK(cmp(down, tenth) < 0);
    CHECK(cmp(up, tenth) > 0);

    const BigFloat three(3L);
    const BigFloat one(1L);
    const Rational q_down = to_rational(div(one, three, Round::Down));
    const Rational q_up = to_rational(div(one, three, Round::Up));
    CHECK(q_down < Rational(1, 3));
    CHECK(Rational(1, 3) < q_up);
  }

  TEST_CASE("WorkingPrecision is scoped") {
    const unsigned outer = WorkingPrecision::digits();
    {
      WorkingPrecision precision(200);
      CHECK(WorkingPrecision::digits() == 200);
      CHECK(BigFloat().precision() == WorkingPrecision::bits());
      CHECK(WorkingPrecision::bits() >= 665);  // 200 * log2(10)
    }
    CHECK(WorkingPrecision::digits() == outer);
  }

  TEST_CASE("half_sum and half_diff") {
    CHECK(half_sum(Rational(1), Rational(4)) == Rational(5, 2));
    CHECK(half_diff(Rational(21, 10), Rational(1, 2), Round::Up) == Rational(4, 5));
    WorkingPrecision precision(20);
    const BigFloat a(Rational(1, 3), Round::Down);
    const BigFloat b(Rational(2, 3), Round::Up);
    const BigFloat m = half_sum(a, b);
    CHECK(cmp(a, m) <= 0);
    CHECK(cmp(m, b) <= 0);
    CHECK(to_rational(half_diff(b, a, Round::Up)) >= (to_rational(b) - to_rational(a)) / 2);
  }

  TEST_CASE("numeric mode names round-trip") {
    CHECK(parse_mode("exact") == NumericMode::Exact);
    CHECK(parse_mode("float") == NumericMode::Float);
    CHECK(to_string(NumericMode::Float) == "float");
    CHECK_THROWS_AS(parse_mode("double"), Error);
  }
}
