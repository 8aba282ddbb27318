#pragma once

// Interval root-enclosure iterations with per-step inclusion auditing.
//
//   MooreNewton     N(X) = md(X) - f(md(X)) / F'(X),  X' = N(X) ∩ X
//   KingLike(b)     Y = N(X) ∩ X,  t = f(md(Y)) / f(md(X)),
//                   K = md(Y) - (1 + b t)/(1 + (b-2) t) * f(md(Y)) / F'(X),
//                   X' = K ∩ X
//   ThreePoint(b)   Z = K ∩ X,
//                   M = md(Z) - (1 + b t)/(1 + (b-2) t) * f(md(Z)) / F'(X),
//                   X' = M ∩ X   (t is the value from the K stage)
//
// Only MooreNewton is an inclusion method. KingLike and ThreePoint multiply
// the slope enclosure by c = (1 + (b-2) t)/(1 + b t) != 1, which shifts it off
// the mean-value slopes, so their output may miss the zero. Every step is
// audited by two independent witnesses: a sign change of f over the produced
// interval, and membership of a reference zero when one is known. A lost
// zero is recorded in the trace, never thrown.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ivlab/bracket.hpp"
#include "ivlab/interval.hpp"

namespace ivlab {

enum class Method { MooreNewton, KingLike, ThreePoint };

struct MethodSpec {
  Method method = Method::MooreNewton;
  Rational beta = 0;  // unused by MooreNewton

  static MethodSpec moore_newton() { return {Method::MooreNewton, 0}; }
  static MethodSpec king_like(Rational beta) { return {Method::KingLike, std::move(beta)}; }
  static MethodSpec three_point(Rational beta) { return {Method::ThreePoint, std::move(beta)}; }
};

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

enum class StepStatus {
  Ok,
  ZeroFound,                // a midpoint is an exact zero
  EmptyIntersection,        // Y, Z or X' is empty
  DegenerateFactor,         // 0 ∈ 1 + (b-2) t
  DerivativeStraddlesZero,  // 0 ∈ F'(X)
  Unresolved,               // float mode: enclosure of f(md(X)) contains 0 but is not {0}
};

/// Which intermediate interval a failure or audit refers to.
enum class Stage { Newton, King, Modified };

std::string_view to_string(StepStatus status);
std::string_view to_string(Stage stage);

struct StageAudit {
  Stage stage = Stage::Newton;
  bool sign_change_ok = true;
  std::optional<bool> known_zero_inside;
};

template <class T>
struct StepRecord {
  std::size_t k = 0;
  Interval<T> x;
  std::optional<Interval<T>> slope;   // F'(X)
  std::optional<Interval<T>> newton;  // N(X)
  std::optional<Interval<T>> y;       // N(X) ∩ X
  std::optional<Interval<T>> king;    // K(X, Y), three-point first stage
  std::optional<Interval<T>> z;       // K ∩ X, three-point only
  std::optional<Interval<T>> t;       // f(md(Y)) / f(md(X))
  std::optional<Interval<T>> c;       // (1 + (b-2) t) / (1 + b t)
  std::optional<Interval<T>> candidate;  // N, K or M before the final intersection
  std::optional<Interval<T>> x_next;
  std::optional<T> zero;              // exact zero found at a midpoint
  StepStatus status = StepStatus::Ok;
  std::optional<Stage> failed_stage;
  /// Conjunction over the audited stages.
  bool sign_change_ok = true;
  std::optional<bool> known_zero_inside;
  std::vector<StageAudit> audits;

  bool inclusion_lost() const {
    return status == StepStatus::Ok && (!sign_change_ok || known_zero_inside == false);
  }
};

enum class Outcome {
  Converged,
  ZeroFound,
  InclusionLost,
  EmptyIntersection,
  DegenerateFactor,
  DerivativeStraddlesZero,
  PrecisionExhausted,
  MaxIterations,
};

std::string_view to_string(Outcome outcome);

/// InclusionLost and EmptyIntersection: the produced interval cannot hold
/// the zero any more.
inline bool is_inclusion_failure(Outcome o) {
  return o == Outcome::InclusionLost || o == Outcome::EmptyIntersection;
}

template <class T>
struct EnclosureTrace {
  MethodSpec method;
  std::vector<StepRecord<T>> steps;
  Outcome outcome = Outcome::MaxIterations;
  /// Index of the step that produced the outcome (absent when the initial
  /// interval already met the tolerance).
  std::optional<std::size_t> outcome_step;
  /// Last interval known to be produced without failure.
  Interval<T> final_interval;

  /// rd(X_0), rd(X_1), ... over the accepted intervals.
  std::vector<T> radii() const;
};

/// at - f(at) / F'(X). Contains every zero of f in X (mean value theorem).
/// Throws DerivativeStraddlesZero when 0 ∈ F'(X).
template <class T>
Interval<T> newton_operator(const BracketedFunction& f, const Interval<T>& x, const T& at);

template <class T>
StepRecord<T> moore_newton_step(const BracketedFunction& f, const Interval<T>& x,
                                const std::optional<Rational>& reference_zero = std::nullopt);

template <class T>
StepRecord<T> kinglike_step(const BracketedFunction& f, const Interval<T>& x, const Rational& beta,
                            const std::optional<Rational>& reference_zero = std::nullopt);

template <class T>
StepRecord<T> threepoint_step(const BracketedFunction& f, const Interval<T>& x, const Rational& beta,
                              const std::optional<Rational>& reference_zero = std::nullopt);

template <class T>
StepRecord<T> enclosure_step(const MethodSpec& method, const BracketedFunction& f, const Interval<T>& x,
                             const std::optional<Rational>& reference_zero = std::nullopt);

/// Iterates until rd(X_k) <= tol, a failure, or max_iter steps. Requires
/// x0 ⊆ f.domain() with a sign change of f over x0, and reference_zero ∈ x0
/// when given (ConfigInvalid otherwise); everything after that is trace data.
template <class T>
EnclosureTrace<T> run_enclosure(const MethodSpec& method, const BracketedFunction& f, const Interval<T>& x0,
                                const Rational& tol, std::size_t max_iter,
                                const std::optional<Rational>& reference_zero = std::nullopt);

/// True unless f(lo) and f(hi) are certified to have the same strict sign.
template <class T>
bool has_sign_change(const Polynomial& f, const Interval<T>& x);

}  // namespace ivlab
