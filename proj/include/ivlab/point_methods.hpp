#pragma once

// Scalar (non-interval) iterations in exact rational arithmetic:
//
//   Newton       x - f(x)/f'(x)                                  order 2
//   King(beta)   y = x - f(x)/f'(x)
//                y - (f(x) + beta f(y)) / (f(x) + (beta-2) f(y)) * f(y)/f'(x)
//                                                                order 4
//   Uncorrected  King with the correction factor replaced by 1   order 3
//
// Ostrowski's method is King with beta = 0.

#include <cstddef>
#include <string>
#include <vector>

#include "ivlab/bracket.hpp"
#include "ivlab/scalar.hpp"

namespace ivlab {

enum class StepRule { Newton, King, Uncorrected };

std::string_view to_string(StepRule rule);

struct ScalarMethod {
  StepRule rule = StepRule::King;
  Rational beta = 0;  // King only

  static ScalarMethod newton() { return {StepRule::Newton, 0}; }
  static ScalarMethod king(Rational beta) { return {StepRule::King, std::move(beta)}; }
  static ScalarMethod uncorrected() { return {StepRule::Uncorrected, 0}; }
};

struct ScalarTrace {
  std::vector<Rational> iterates;
  std::vector<Rational> residuals;  // f at each iterate
  bool converged = false;
};

/// Throws DerivativeZero when f'(x) = 0.
Rational newton_step(const BracketedFunction& f, const Rational& x);

/// One step of King's family. Returns y unchanged when f(y) = 0.
/// Throws DerivativeZero, or CorrectionDenominatorZero when
/// f(x) + (beta-2) f(y) = 0.
Rational king_step(const BracketedFunction& f, const Rational& x, const Rational& beta);

/// King's two-point scheme with the corrective factor set to 1.
/// Throws DerivativeZero.
Rational uncorrected_step(const BracketedFunction& f, const Rational& x);

Rational apply(const ScalarMethod& method, const BracketedFunction& f, const Rational& x);

/// Steps until |f(x_k)| <= tol or max_iter steps have been taken. Step errors
/// are rethrown with the failing iteration index in the message.
ScalarTrace iterate_scalar(const ScalarMethod& method, const BracketedFunction& f, const Rational& x0,
                           const Rational& tol, std::size_t max_iter);

}  // namespace ivlab
