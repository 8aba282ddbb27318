#include "ivlab/bracket.hpp"

#include "ivlab/error.hpp"

namespace ivlab {

BracketedFunction::BracketedFunction(Polynomial f, Interval<Rational> domain)
    : f_(std::move(f)), df_(f_.derivative()), d2f_(df_.derivative()), domain_(std::move(domain)) {}

BracketedFunction check_bracket(const Polynomial& f, const Interval<Rational>& domain) {
  const Rational at_lo = f(domain.lo());
  const Rational at_hi = f(domain.hi());
  if (sgn(at_lo) * sgn(at_hi) >= 0) {
    throw Error(ErrorCode::NoSignChange, "f(" + format_exact(domain.lo()) + ") * f(" +
                                             format_exact(domain.hi()) + ") >= 0 for f = " + f.to_string());
  }
  BracketedFunction out(f, domain);
  const Interval<Rational> slope = derivative_range(out, domain);
  if (slope.contains_zero()) {
    throw Error(ErrorCode::NotMonotone, "F'(X) = " + to_string(slope, 12) + " contains 0 for f = " + f.to_string());
  }
  out.orientation_ = slope.strictly_positive() ? 1 : -1;
  return out;
}

}  // namespace ivlab
