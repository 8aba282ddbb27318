#pragma once

// Randomized failure-rate study of KingLike(beta):
//
//   P(x) = (x - 1)(x^6 + a5 x^5 + ... + a1 x + a0),  a_i uniform on (0, 1),
//   X0 = [0.6, 3],  beta on a grid,  reference zero 1.
//
// A trial fails when its outcome is InclusionLost or EmptyIntersection.
// Every draw comes from a substream keyed by (seed, experiment, polynomial,
// attempt), and results are stored by index, so the report does not depend
// on thread count or scheduling.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ivlab/enclosure.hpp"

namespace ivlab::lab {

struct StudyConfig {
  std::size_t n_experiments = 2;
  std::size_t n_polynomials = 20;
  std::vector<Rational> beta_grid;
  Interval<Rational> x0;
  std::uint64_t master_seed = 1;
  NumericMode mode = NumericMode::Float;
  unsigned precision_digits = kDefaultFloatDigits;
  Rational tol;
  std::size_t max_iter = 40;
  unsigned threads = 0;  // 0: hardware concurrency

  std::size_t trials_per_experiment() const { return n_polynomials * beta_grid.size(); }

  /// 20 experiments x 100 polynomials x 10 betas.
  static StudyConfig full_protocol();
  /// 2 experiments x 20 polynomials x 10 betas.
  static StudyConfig smoke();

  /// Throws ConfigInvalid.
  void validate() const;
};

using SexticCoefficients = std::array<Rational, 6>;  // a0 .. a5

/// (x - 1)(x^6 + a5 x^5 + ... + a0).
Polynomial study_polynomial(const SexticCoefficients& a);

struct DrawnPolynomial {
  SexticCoefficients a;
  std::size_t redraws = 0;  // draws rejected by check_bracket before this one
  BracketedFunction f;
};

/// Draws until check_bracket accepts P on x0; attempt r uses the substream
/// (seed, experiment, polynomial, r).
DrawnPolynomial draw_polynomial(std::uint64_t master_seed, std::size_t experiment, std::size_t polynomial,
                                const Interval<Rational>& x0);

struct TrialResult {
  std::size_t experiment = 0;
  std::size_t polynomial = 0;
  std::size_t beta_index = 0;
  Outcome outcome = Outcome::MaxIterations;
  std::optional<std::size_t> outcome_step;
  bool failed() const { return is_inclusion_failure(outcome); }
};

struct Witness {
  std::size_t experiment = 0;
  std::size_t polynomial = 0;
  SexticCoefficients a;
  Rational beta;
  Outcome outcome = Outcome::InclusionLost;
  std::optional<std::size_t> outcome_step;
};

struct ExperimentSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double failure_percent = 0;
  std::size_t redraws = 0;
};

struct BetaSummary {
  Rational beta;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double failure_percent = 0;
};

struct StudyReport {
  StudyConfig config;
  std::vector<ExperimentSummary> experiments;
  double min_percent = 0;
  double max_percent = 0;
  double mean_percent = 0;
  std::vector<BetaSummary> per_beta;
  std::map<Outcome, std::size_t> outcome_counts;
  std::size_t redraws = 0;
  std::vector<TrialResult> trials;  // experiment-major, then polynomial, then beta
  std::vector<Witness> witnesses;   // every failing trial, in trial order
};

StudyReport failure_rate_study(const StudyConfig& cfg);

/// Re-runs one witness under cfg's x0, mode, precision, tol and max_iter.
TrialResult replay_witness(const Witness& w, const StudyConfig& cfg);

}  // namespace ivlab::lab
