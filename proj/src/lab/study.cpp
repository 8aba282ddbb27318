#include "ivlab/lab/study.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ivlab/error.hpp"
#include "ivlab/lab/corpus.hpp"
#include "ivlab/lab/rng.hpp"

namespace ivlab::lab {

StudyConfig StudyConfig::smoke() {
  StudyConfig cfg;
  cfg.beta_grid = default_beta_grid();
  cfg.x0 = Interval<Rational>::make(Rational(3, 5), Rational(3));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 300);
  cfg.tol = Rational(mpz_class(1), den);
  return cfg;
}

StudyConfig StudyConfig::full_protocol() {
  StudyConfig cfg = smoke();
  cfg.n_experiments = 20;
  cfg.n_polynomials = 100;
  return cfg;
}

void StudyConfig::validate() const {
  if (n_experiments == 0) throw Error(ErrorCode::ConfigInvalid, "need at least one experiment");
  if (n_polynomials == 0) throw Error(ErrorCode::ConfigInvalid, "need at least one polynomial per experiment");
  if (beta_grid.empty()) throw Error(ErrorCode::ConfigInvalid, "beta grid is empty");
  if (sgn(tol) < 0) throw Error(ErrorCode::ConfigInvalid, "tol must be nonnegative");
  if (max_iter == 0) throw Error(ErrorCode::ConfigInvalid, "max_iter must be positive");
  if (mode == NumericMode::Float && precision_digits < 16) {
    throw Error(ErrorCode::ConfigInvalid, "precision must be at least 16 digits");
  }
  if (!contains(x0, Rational(1))) throw Error(ErrorCode::ConfigInvalid, "x0 must contain the zero 1");
}

Polynomial study_polynomial(const SexticCoefficients& a) {
  std::vector<Rational> sextic(a.begin(), a.end());
  sextic.push_back(Rational(1));
  return Polynomial{Rational(-1), Rational(1)} * Polynomial(std::move(sextic));
}

DrawnPolynomial draw_polynomial(std::uint64_t master_seed, std::size_t experiment, std::size_t polynomial,
                                const Interval<Rational>& x0) {
  constexpr std::size_t kMaxAttempts = 10000;
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SplitMix64 rng(derive_seed(master_seed, {experiment, polynomial, attempt}));
    SexticCoefficients a;
    for (auto& c : a) c = uniform_dyadic(rng);
    try {
      BracketedFunction f = check_bracket(study_polynomial(a), x0);
      return DrawnPolynomial{std::move(a), attempt, std::move(f)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSignChange && e.code() != ErrorCode::NotMonotone) throw;
    }
  }
  throw Error(ErrorCode::ConfigInvalid, "no admissible polynomial found on " + to_string(x0, 17));
}

namespace {

template <class T>
TrialResult run_trial(const BracketedFunction& f, const Rational& beta, const StudyConfig& cfg) {
  const auto trace = run_enclosure<T>(MethodSpec::king_like(beta), f, convert<T>(cfg.x0), cfg.tol, cfg.max_iter,
                                      Rational(1));
  TrialResult r;
  r.outcome = trace.outcome;
  r.outcome_step = trace.outcome_step;
  return r;
}

TrialResult run_trial_in_mode(const BracketedFunction& f, const Rational& beta, const StudyConfig& cfg) {
  if (cfg.mode == NumericMode::Exact) return run_trial<Rational>(f, beta, cfg);
  WorkingPrecision precision(cfg.precision_digits);
  return run_trial<BigFloat>(f, beta, cfg);
}

struct PolynomialResult {
  SexticCoefficients a;
  std::size_t redraws = 0;
  std::vector<TrialResult> trials;
};

PolynomialResult run_polynomial(const StudyConfig& cfg, std::size_t experiment, std::size_t polynomial) {
  DrawnPolynomial drawn = draw_polynomial(cfg.master_seed, experiment, polynomial, cfg.x0);
  PolynomialResult out{drawn.a, drawn.redraws, {}};
  for (std::size_t b = 0; b < cfg.beta_grid.size(); ++b) {
    TrialResult r = run_trial_in_mode(drawn.f, cfg.beta_grid[b], cfg);
    r.experiment = experiment;
    r.polynomial = polynomial;
    r.beta_index = b;
    out.trials.push_back(r);
  }
  return out;
}

double percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

StudyReport failure_rate_study(const StudyConfig& cfg) {
  cfg.validate();
  const std::size_t jobs = cfg.n_experiments * cfg.n_polynomials;
  std::vector<PolynomialResult> results(jobs);

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t j = next++; j < jobs; j = next++) {
        results[j] = run_polynomial(cfg, j / cfg.n_polynomials, j % cfg.n_polynomials);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = jobs;
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Aggregation walks the index-ordered results only.
  StudyReport report;
  report.config = cfg;
  report.experiments.resize(cfg.n_experiments);
  report.per_beta.resize(cfg.beta_grid.size());
  for (std::size_t b = 0; b < cfg.beta_grid.size(); ++b) report.per_beta[b].beta = cfg.beta_grid[b];

  for (std::size_t j = 0; j < jobs; ++j) {
    const PolynomialResult& pr = results[j];
    ExperimentSummary& ex = report.experiments[j / cfg.n_polynomials];
    ex.redraws += pr.redraws;
    report.redraws += pr.redraws;
    for (const TrialResult& t : pr.trials) {
      ++ex.trials;
      ++report.per_beta[t.beta_index].trials;
      ++report.outcome_counts[t.outcome];
      if (t.failed()) {
        ++ex.failures;
        ++report.per_beta[t.beta_index].failures;
        report.witnesses.push_back(
            Witness{t.experiment, t.polynomial, pr.a, cfg.beta_grid[t.beta_index], t.outcome, t.outcome_step});
      }
      report.trials.push_back(t);
    }
  }
  for (auto& ex : report.experiments) ex.failure_percent = percent(ex.failures, ex.trials);
  for (auto& b : report.per_beta) b.failure_percent = percent(b.failures, b.trials);

  report.min_percent = report.experiments.front().failure_percent;
  report.max_percent = report.min_percent;
  double sum = 0;
  for (const auto& ex : report.experiments) {
    report.min_percent = std::min(report.min_percent, ex.failure_percent);
    report.max_percent = std::max(report.max_percent, ex.failure_percent);
    sum += ex.failure_percent;
  }
  report.mean_percent = sum / static_cast<double>(report.experiments.size());
  return report;
}

TrialResult replay_witness(const Witness& w, const StudyConfig& cfg) {
  const BracketedFunction f = check_bracket(study_polynomial(w.a), cfg.x0);
  TrialResult r = run_trial_in_mode(f, w.beta, cfg);
  r.experiment = w.experiment;
  r.polynomial = w.polynomial;
  return r;
}

}  // namespace ivlab::lab
