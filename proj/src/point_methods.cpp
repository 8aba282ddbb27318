#include "ivlab/point_methods.hpp"

#include "ivlab/error.hpp"

namespace ivlab {

std::string_view to_string(StepRule rule) {
  switch (rule) {
    case StepRule::Newton: return "newton";
    case StepRule::King: return "king";
    case StepRule::Uncorrected: return "uncorrected";
  }
  return "unknown";
}

namespace {

Rational slope_at(const BracketedFunction& f, const Rational& x) {
  Rational d = f.derivative()(x);
  if (sgn(d) == 0) throw Error(ErrorCode::DerivativeZero, "f'(" + format_exact(x) + ") = 0");
  return d;
}

}  // namespace

Rational newton_step(const BracketedFunction& f, const Rational& x) {
  const Rational d = slope_at(f, x);
  return Rational(x - f.f()(x) / d);
}

Rational king_step(const BracketedFunction& f, const Rational& x, const Rational& beta) {
  const Rational d = slope_at(f, x);
  const Rational fx = f.f()(x);
  const Rational y = x - fx / d;
  const Rational fy = f.f()(y);
  if (sgn(fy) == 0) return y;
  const Rational denom = fx + (beta - 2) * fy;
  if (sgn(denom) == 0) {
    throw Error(ErrorCode::CorrectionDenominatorZero, "f(x) + (beta - 2) f(y) = 0 at x = " + format_exact(x));
  }
  return Rational(y - (fx + beta * fy) / denom * fy / d);
}

Rational uncorrected_step(const BracketedFunction& f, const Rational& x) {
  const Rational d = slope_at(f, x);
  const Rational y = x - f.f()(x) / d;
  return Rational(y - f.f()(y) / d);
}

Rational apply(const ScalarMethod& method, const BracketedFunction& f, const Rational& x) {
  switch (method.rule) {
    case StepRule::Newton: return newton_step(f, x);
    case StepRule::King: return king_step(f, x, method.beta);
    case StepRule::Uncorrected: return uncorrected_step(f, x);
  }
  return x;
}

ScalarTrace iterate_scalar(const ScalarMethod& method, const BracketedFunction& f, const Rational& x0,
                           const Rational& tol, std::size_t max_iter) {
  if (!f.domain().contains(x0)) {
    throw Error(ErrorCode::ConfigInvalid, "x0 = " + format_exact(x0) + " lies outside the bracket");
  }
  ScalarTrace trace;
  trace.iterates.push_back(x0);
  trace.residuals.push_back(f.f()(x0));
  auto done = [&] { return abs(trace.residuals.back()) <= tol; };

  for (std::size_t k = 0; k < max_iter && !done(); ++k) {
    Rational next;
    try {
      next = apply(method, f, trace.iterates.back());
    } catch (const Error& e) {
      throw Error(e.code(), e.detail() + " (iteration " + std::to_string(k) + ")");
    }
    trace.residuals.push_back(f.f()(next));
    trace.iterates.push_back(std::move(next));
  }
  trace.converged = done();
  return trace;
}

}  // namespace ivlab
