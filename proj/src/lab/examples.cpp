#include "ivlab/lab/examples.hpp"

#include "ivlab/error.hpp"

namespace ivlab::lab {

std::string_view to_string(Example which) { return which == Example::One ? "example1" : "example2"; }

Example parse_example(std::string_view text) {
  if (text == "1" || text == "example1") return Example::One;
  if (text == "2" || text == "example2") return Example::Two;
  throw Error(ErrorCode::ConfigInvalid, "unknown example '" + std::string(text) + "' (use 1 or 2)");
}

bool ExampleReport::all_pass() const {
  for (const auto& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

namespace {

constexpr int kShownDigits = 12;

template <class T>
ComparisonRow interval_row(std::string quantity, const std::optional<Interval<T>>& computed, const char* expected,
                           const Rational& tol) {
  ComparisonRow row{std::move(quantity), expected, "(not produced)", tol, false};
  if (!computed) return row;
  row.computed = to_string(*computed, kShownDigits);
  row.pass = endpoints_within(*computed, parse_interval(expected), tol);
  return row;
}

template <class T>
ComparisonRow verdict_row(std::string quantity, const std::optional<Interval<T>>& x, const Rational& value,
                          bool expected) {
  ComparisonRow row{std::move(quantity), expected ? "true" : "false", "(not produced)", std::nullopt, false};
  if (!x) return row;
  const bool got = contains(*x, value);
  row.computed = got ? "true" : "false";
  row.pass = got == expected;
  return row;
}

template <class T>
void example_one(ExampleReport& report, const BracketedFunction& f) {
  const Rational tol(5, 10000);
  const Rational two(2);
  const auto r = kinglike_step<T>(f, convert<T>(f.domain()), report.beta, two);

  const Rational mid = midpoint(f.domain());
  const Rational f_mid = f.f()(mid);
  report.rows.push_back({"f(md(X0))", "-8.113", format_exact(f_mid), std::nullopt, f_mid == parse_decimal("-8.113")});
  report.rows.push_back(interval_row<T>("F'(X0)", r.slope, "[1.75, 17.43]", tol));
  report.rows.push_back(interval_row<T>("N(X0)", r.newton, "[1.76546, 5.936]", tol));
  report.rows.push_back(interval_row<T>("Y0", r.y, "[1.76546, 2.1]", tol));
  report.rows.push_back(interval_row<T>("K(X0,Y0)", r.king, "[2.01348, 2.73702]", tol));
  report.rows.push_back(verdict_row<T>("2 in N(X0)", r.newton, two, true));
  report.rows.push_back(verdict_row<T>("2 in K(X0,Y0)", r.king, two, false));

  // Contrast: Moore-Newton on the same input keeps the zero at every step.
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 50);
  const auto mn = run_enclosure<T>(MethodSpec::moore_newton(), f, convert<T>(f.domain()), Rational(1, den), 40, two);
  bool kept = !mn.steps.empty();
  for (const auto& step : mn.steps) kept = kept && step.known_zero_inside.value_or(false) && step.sign_change_ok;
  const bool converged = mn.outcome == Outcome::Converged || mn.outcome == Outcome::ZeroFound;
  report.rows.push_back({"Moore-Newton keeps 2 every step", "true",
                         std::string(kept ? "true" : "false") + " (" + std::to_string(mn.steps.size()) + " steps, " +
                             std::string(ivlab::to_string(mn.outcome)) + ")",
                         std::nullopt, kept && converged});
}

template <class T>
void example_two(ExampleReport& report, const BracketedFunction& f) {
  const Rational tol(5, 1000000);
  const Rational two(2);
  const auto r = kinglike_step<T>(f, convert<T>(f.domain()), report.beta, two);
  report.rows.push_back(interval_row<T>("K(X0,Y0)", r.king, "[2.024393, 2.029699]", tol));
  report.rows.push_back(verdict_row<T>("2 in K(X0,Y0)", r.king, two, false));
}

template <class T>
void fill(ExampleReport& report, const BracketedFunction& f) {
  if (report.which == Example::One) {
    example_one<T>(report, f);
  } else {
    example_two<T>(report, f);
  }
}

}  // namespace

ExampleReport reproduce_example(Example which, NumericMode mode) {
  ExampleReport report;
  report.which = which;
  report.mode = mode;
  const Polynomial p = which == Example::One ? Polynomial::parse("-12, 0, 1, 1") : Polynomial::parse("-8, 0, 0, 1");
  report.x0 = parse_interval(which == Example::One ? "[0.5, 2.1]" : "[1.5, 2.3]");
  report.beta = which == Example::One ? Rational(0) : Rational(5);
  report.function = p.to_string();
  const BracketedFunction f = check_bracket(p, report.x0);
  if (mode == NumericMode::Exact) {
    fill<Rational>(report, f);
  } else {
    fill<BigFloat>(report, f);
  }
  return report;
}

}  // namespace ivlab::lab
