#pragma once

// Convergence-order study over a corpus of functions with known zeros:
//
//   KingLike(beta)  fixed number of steps (5), r_c from the last three radii;
//                   cells that fail or hit an exact zero are excluded
//   MooreNewton     stepped until r_c can be formed from radii below the
//                   smallness threshold
//   scalar King(beta), uncorrected and Newton
//                   same, on |x_k - x*|

#include <optional>
#include <string>
#include <vector>

#include "ivlab/lab/coc.hpp"
#include "ivlab/lab/corpus.hpp"

namespace ivlab::lab {

struct CocStudyConfig {
  std::vector<Rational> beta_grid;
  NumericMode mode = NumericMode::Exact;
  unsigned precision_digits = kDefaultFloatDigits;
  std::size_t kinglike_steps = 5;
  Rational smallness;
  std::size_t max_steps = 30;  // cap for the threshold-driven runs
  bool include_kinglike = true;
  bool include_moore_newton = true;
  bool include_scalar = true;

  static CocStudyConfig defaults();
  void validate() const;
};

struct CocCell {
  std::string function;
  std::string method;  // "king-like", "moore-newton", "king", "uncorrected", "newton"
  std::optional<Rational> beta;
  /// Enclosure outcome for interval methods; absent for scalar runs.
  std::optional<Outcome> outcome;
  std::optional<CocMeasurement> coc;
  std::string note;  // why no measurement was taken
};

struct CocSummary {
  std::size_t cells = 0;
  std::size_t measured = 0;
  std::size_t valid = 0;
  double min = 0;
  double median = 0;
  double max = 0;
};

struct CocStudyReport {
  CocStudyConfig config;
  std::vector<CocCell> cells;

  /// Over valid measurements of one method.
  CocSummary summary(const std::string& method) const;
};

CocStudyReport coc_study(const std::vector<CorpusEntry>& corpus, const CocStudyConfig& cfg);

/// One KingLike cell: runs cfg.kinglike_steps steps with tol 0.
CocCell kinglike_coc(const CorpusEntry& entry, const Rational& beta, const CocStudyConfig& cfg);
CocCell moore_newton_coc(const CorpusEntry& entry, const CocStudyConfig& cfg);
CocCell scalar_coc(const CorpusEntry& entry, const ScalarMethod& method, const CocStudyConfig& cfg);

}  // namespace ivlab::lab
