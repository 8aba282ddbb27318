#pragma once

#include <optional>
#include <vector>

#include "ivlab/interval.hpp"
#include "ivlab/polynomial.hpp"

namespace ivlab {

/// A polynomial together with a domain on which it has a verified sign
/// change and a verified nonvanishing derivative, hence exactly one zero.
/// Only check_bracket() constructs these.
class BracketedFunction {
 public:
  const Polynomial& f() const { return f_; }
  const Polynomial& derivative() const { return df_; }
  const Polynomial& second_derivative() const { return d2f_; }
  const Interval<Rational>& domain() const { return domain_; }
  /// +1 if f is increasing on the domain, -1 if decreasing.
  int orientation() const { return orientation_; }

 private:
  friend BracketedFunction check_bracket(const Polynomial& f, const Interval<Rational>& domain);
  BracketedFunction(Polynomial f, Interval<Rational> domain);

  Polynomial f_;
  Polynomial df_;
  Polynomial d2f_;
  Interval<Rational> domain_;
  int orientation_ = 1;
};

/// Verifies f(lo) f(hi) < 0 and 0 ∉ F'(domain).
/// Throws NoSignChange or NotMonotone.
BracketedFunction check_bracket(const Polynomial& f, const Interval<Rational>& domain);

/// Maximum bisection depth used by derivative_range when f'' cannot be shown
/// sign-definite on the whole argument.
inline constexpr int kDerivativeRangeDepth = 10;

/// F'(X) ⊇ {f'(x) : x ∈ X}.
///
/// X is split adaptively until interval Horner shows f'' sign-definite on each
/// piece; f' is monotone there, so the piece contributes the exact hull of f'
/// at its endpoints. Pieces still undecided at kDerivativeRangeDepth fall back
/// to interval Horner of f'. When f'' is sign-definite on all of X the result
/// is I(f'(lo), f'(hi)) (exact in exact mode).
template <class T>
Interval<T> derivative_range(const Polynomial& df, const Polynomial& d2f, const Interval<T>& x) {
  struct Piece {
    Interval<T> span;
    int depth;
  };
  std::vector<Piece> pending{{x, 0}};
  std::optional<Interval<T>> acc;
  auto absorb = [&](const Interval<T>& part) { acc = acc ? hull(*acc, part) : part; };

  while (!pending.empty()) {
    Piece piece = std::move(pending.back());
    pending.pop_back();
    const Interval<T>& s = piece.span;
    if (s.is_point() || d2f.is_zero() || !interval_eval(d2f, s).contains_zero()) {
      absorb(hull(eval_at(df, s.lo()), eval_at(df, s.hi())));
    } else if (piece.depth >= kDerivativeRangeDepth) {
      absorb(interval_eval(df, s));
    } else {
      T mid = midpoint(s);
      pending.push_back({Interval<T>::make(mid, s.hi()), piece.depth + 1});
      pending.push_back({Interval<T>::make(s.lo(), std::move(mid)), piece.depth + 1});
    }
  }
  return *acc;
}

template <class T>
Interval<T> derivative_range(const BracketedFunction& f, const Interval<T>& x) {
  return derivative_range(f.derivative(), f.second_derivative(), x);
}

}  // namespace ivlab
