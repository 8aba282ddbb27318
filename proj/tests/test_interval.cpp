#include <doctest.h>

#include "ivlab/error.hpp"
#include "ivlab/interval.hpp"

using namespace ivlab;
using RI = Interval<Rational>;

namespace {
RI iv(const char* text) { return parse_interval(text); }
}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("construction validates bounds") {
    CHECK_THROWS_AS(RI::make(Rational(2), Rational(1)), Error);
    try {
      RI::make(Rational(2), Rational(1));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidBounds);
    }
    CHECK(RI::make(Rational(1), Rational(1)).is_point());
    CHECK(RI::hull(Rational(3), Rational(-1)) == iv("[-1, 3]"));
  }

  TEST_CASE("parse_interval") {
    const RI x = iv("[0.5, 2.1]");
    CHECK(x.lo() == Rational(1, 2));
    CHECK(x.hi() == Rational(21, 10));
    CHECK_THROWS_AS(iv("0.5, 2.1"), Error);
    CHECK_THROWS_AS(iv("[2.1, 0.5]"), Error);
  }

  TEST_CASE("midpoint and radius") {
    CHECK(midpoint(iv("[1, 4]")) == Rational(5, 2));
    CHECK(radius(iv("[0.5, 2.1]")) == Rational(4, 5));
    CHECK(radius(iv("[0.6, 3]")) == Rational(6, 5));
    CHECK(radius(RI::point(Rational(7))) == 0);
  }

  TEST_CASE("intersection and hull") {
    CHECK(*intersect(iv("[1.76546, 5.936]"), iv("[0.5, 2.1]")) == iv("[1.76546, 2.1]"));
    CHECK_FALSE(intersect(iv("[0, 1]"), iv("[2, 3]")).has_value());
    CHECK(intersect(iv("[0, 1]"), iv("[1, 3]"))->is_point());
    CHECK(hull(iv("[0, 1]"), iv("[2, 3]")) == iv("[0, 3]"));
  }

  TEST_CASE("exact arithmetic on known values") {
    CHECK(iv("[1, 2]") + iv("[3, 5]") == iv("[4, 7]"));
    CHECK(iv("[1, 2]") - iv("[3, 5]") == iv("[-4, -1]"));
    CHECK(iv("[-1, 2]") * iv("[3, 5]") == iv("[-5, 10]"));
    CHECK(iv("[-1, 2]") * iv("[-3, 5]") == iv("[-6, 10]"));
    CHECK(iv("[-2, -1]") * iv("[-3, 5]") == iv("[-10, 6]"));
    CHECK(iv("[1, 2]") / iv("[4, 8]") == iv("[0.125, 0.5]"));
    CHECK(iv("[-1, 2]") / iv("[-4, -2]") == iv("[-1, 0.5]"));
    CHECK(-iv("[1, 2]") == iv("[-2, -1]"));
  }

  TEST_CASE("division by an interval containing zero throws") {
    CHECK_THROWS_AS(iv("[1, 2]") / iv("[-1, 1]"), Error);
    try {
      (void)(iv("[1, 2]") / iv("[0, 1]"));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZeroInterval);
    }
  }

  TEST_CASE("Moore-Newton operator of the first figure") {
    // 2.5 - f(2.5)/[f'(1), f'(4)] for f = x^2 - 4.
    const RI n = RI::point(Rational(5, 2)) - RI::point(Rational(9, 4)) / iv("[2, 8]");
    CHECK(n == iv("[1.375, 2.21875]"));
  }

  TEST_CASE("float mode encloses exact values") {
    WorkingPrecision precision(40);
    const RI exact = iv("[0.1, 0.7]");
    const Interval<BigFloat> x = convert<BigFloat>(exact);
    CHECK(to_rational(x.lo()) <= exact.lo());
    CHECK(exact.hi() <= to_rational(x.hi()));
    CHECK_FALSE(x.is_point());
    CHECK(contains(x, Rational(1, 10)));
    CHECK(contains(x, Rational(7, 10)));
    CHECK_FALSE(contains(x, Rational(71, 100)));
  }

  TEST_CASE("to_string rounds outward") {
    const RI x = RI::make(Rational(1, 3), Rational(2, 3));
    CHECK(to_string(x, 4) == "[0.3333, 0.6667]");
    CHECK(to_string(RI::make(Rational(-2, 3), Rational(-1, 3)), 4) == "[-0.6667, -0.3333]");
  }
}
