#include <doctest.h>

#include "ivlab/bracket.hpp"
#include "ivlab/error.hpp"

using namespace ivlab;

namespace {
ErrorCode code_of(const Polynomial& p, const char* x) {
  try {
    check_bracket(p, parse_interval(x));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ConfigInvalid;
}
}  // namespace

TEST_SUITE("bracket") {
  TEST_CASE("valid brackets") {
    const BracketedFunction f = check_bracket(Polynomial::parse("-12, 0, 1, 1"), parse_interval("[0.5, 2.1]"));
    CHECK(f.orientation() == 1);
    CHECK(f.derivative() == Polynomial::parse("0, 2, 3"));
    const BracketedFunction g = check_bracket(Polynomial::parse("1, -1"), parse_interval("[0, 3]"));
    CHECK(g.orientation() == -1);
  }

  TEST_CASE("no sign change") {
    CHECK(code_of(Polynomial::parse("-4, 0, 1"), "[2.5, 3]") == ErrorCode::NoSignChange);
    // A zero at an endpoint is not a strict sign change.
    CHECK(code_of(Polynomial::parse("-4, 0, 1"), "[2, 3]") == ErrorCode::NoSignChange);
  }

  TEST_CASE("not monotone") {
    // x^3 - x changes sign on [-0.5, 2] but f' vanishes at 1/sqrt(3).
    CHECK(code_of(Polynomial::parse("0, -1, 0, 1"), "[0.5, 2]") == ErrorCode::NotMonotone);
  }

  TEST_CASE("derivative_range is the endpoint hull when f'' keeps its sign") {
    const BracketedFunction f = check_bracket(Polynomial::parse("-12, 0, 1, 1"), parse_interval("[0.5, 2.1]"));
    CHECK(derivative_range(f, f.domain()) == parse_interval("[1.75, 17.43]"));
    const BracketedFunction g = check_bracket(Polynomial::parse("-4, 0, 1"), parse_interval("[1, 4]"));
    CHECK(derivative_range(g, g.domain()) == parse_interval("[2, 8]"));
  }

  TEST_CASE("derivative_range refines where f'' changes sign") {
    // f' = 3x^2 - 6x + 4 has its minimum 1 at x = 1 inside [0, 3].
    const Polynomial p = Polynomial::parse("-1, 4, -3, 1");
    const Interval<Rational> x = parse_interval("[0, 3]");
    const Interval<Rational> r = derivative_range(p.derivative(), p.derivative().derivative(), x);
    CHECK(r.lo() <= 1);
    CHECK(r.lo() > 0);
    CHECK(r.hi() == 13);
    // Plain interval Horner cannot exclude zero here.
    CHECK(interval_eval(p.derivative(), x).contains_zero());
  }
}
