#pragma once

// The two published counterexamples, recomputed and compared against the
// printed digits:
//
//   Example 1  f = x^3 + x^2 - 12, X0 = [0.5, 2.1], KingLike(0)
//   Example 2  f = x^3 - 8,        X0 = [1.5, 2.3], KingLike(5)

#include <optional>
#include <string>
#include <vector>

#include "ivlab/enclosure.hpp"

namespace ivlab::lab {

enum class Example { One, Two };

std::string_view to_string(Example which);
Example parse_example(std::string_view text);

struct ComparisonRow {
  std::string quantity;
  std::string expected;
  std::string computed;
  std::optional<Rational> tolerance;  // per endpoint; absent for verdicts
  bool pass = false;
};

struct ExampleReport {
  Example which = Example::One;
  std::string function;
  Interval<Rational> x0;
  Rational beta;
  NumericMode mode = NumericMode::Exact;
  std::vector<ComparisonRow> rows;

  bool all_pass() const;
};

/// Float mode runs at the current WorkingPrecision.
ExampleReport reproduce_example(Example which, NumericMode mode = NumericMode::Exact);

/// max(|lo - e.lo|, |hi - e.hi|) <= tol, evaluated exactly.
template <class T>
bool endpoints_within(const Interval<T>& x, const Interval<Rational>& expected, const Rational& tol) {
  const Interval<Rational> q = to_rational(x);
  return abs(q.lo() - expected.lo()) <= tol && abs(q.hi() - expected.hi()) <= tol;
}

}  // namespace ivlab::lab
