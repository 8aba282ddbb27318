#include "ivlab/lab/coc_study.hpp"

#include <algorithm>

#include "ivlab/error.hpp"

namespace ivlab::lab {

CocStudyConfig CocStudyConfig::defaults() {
  CocStudyConfig cfg;
  cfg.beta_grid = default_beta_grid();
  cfg.smallness = default_smallness();
  return cfg;
}

void CocStudyConfig::validate() const {
  if (kinglike_steps < 2) throw Error(ErrorCode::ConfigInvalid, "need at least two KingLike steps");
  if (sgn(smallness) <= 0) throw Error(ErrorCode::ConfigInvalid, "smallness must be positive");
  if (max_steps < 2) throw Error(ErrorCode::ConfigInvalid, "max_steps must be at least 2");
  if (mode == NumericMode::Float && precision_digits < 16) {
    throw Error(ErrorCode::ConfigInvalid, "precision must be at least 16 digits");
  }
}

namespace {

void measure(CocCell& cell, std::span<const Rational> magnitudes, const Rational& smallness) {
  try {
    cell.coc = computational_order(magnitudes, smallness);
    if (!cell.coc->valid) cell.note = "magnitudes not below the smallness threshold";
  } catch (const Error& e) {
    cell.note = e.what();
  }
}

template <class T>
std::vector<Rational> radii_of(const EnclosureTrace<T>& trace) {
  std::vector<Rational> out;
  for (const T& r : trace.radii()) out.push_back(to_rational(r));
  return out;
}

template <class T>
CocCell kinglike_in(const CorpusEntry& entry, const Rational& beta, const CocStudyConfig& cfg) {
  CocCell cell{entry.name, "king-like", beta, std::nullopt, std::nullopt, {}};
  const auto trace = run_enclosure<T>(MethodSpec::king_like(beta), entry.f, convert<T>(entry.f.domain()),
                                      Rational(0), cfg.kinglike_steps, entry.zero);
  cell.outcome = trace.outcome;
  if (trace.outcome != Outcome::MaxIterations) {
    cell.note = "excluded: " + std::string(to_string(trace.outcome));
    return cell;
  }
  const auto radii = radii_of(trace);
  measure(cell, radii, cfg.smallness);
  return cell;
}

// Steps until the earliest of the last three radii is below smallness.
template <class T>
CocCell moore_newton_in(const CorpusEntry& entry, const CocStudyConfig& cfg) {
  CocCell cell{entry.name, "moore-newton", std::nullopt, std::nullopt, std::nullopt, {}};
  Interval<T> x = convert<T>(entry.f.domain());
  std::vector<Rational> radii{to_rational(radius(x))};
  Outcome outcome = Outcome::MaxIterations;
  for (std::size_t k = 0; k < cfg.max_steps; ++k) {
    if (radii.size() >= 3 && radii[radii.size() - 3] <= cfg.smallness) break;
    StepRecord<T> r = moore_newton_step(entry.f, x, std::optional<Rational>(entry.zero));
    if (r.status == StepStatus::ZeroFound) {
      outcome = Outcome::ZeroFound;
      radii.push_back(Rational(0));
      break;
    }
    if (r.status != StepStatus::Ok) {
      outcome = r.status == StepStatus::EmptyIntersection ? Outcome::EmptyIntersection
                                                          : Outcome::DerivativeStraddlesZero;
      break;
    }
    if (r.inclusion_lost()) {
      outcome = Outcome::InclusionLost;
      break;
    }
    if (*r.x_next == x) {
      outcome = Outcome::PrecisionExhausted;
      break;
    }
    x = *r.x_next;
    radii.push_back(to_rational(radius(x)));
  }
  cell.outcome = outcome;
  measure(cell, radii, cfg.smallness);
  return cell;
}

}  // namespace

CocCell kinglike_coc(const CorpusEntry& entry, const Rational& beta, const CocStudyConfig& cfg) {
  if (cfg.mode == NumericMode::Exact) return kinglike_in<Rational>(entry, beta, cfg);
  WorkingPrecision precision(cfg.precision_digits);
  return kinglike_in<BigFloat>(entry, beta, cfg);
}

CocCell moore_newton_coc(const CorpusEntry& entry, const CocStudyConfig& cfg) {
  if (cfg.mode == NumericMode::Exact) return moore_newton_in<Rational>(entry, cfg);
  WorkingPrecision precision(cfg.precision_digits);
  return moore_newton_in<BigFloat>(entry, cfg);
}

CocCell scalar_coc(const CorpusEntry& entry, const ScalarMethod& method, const CocStudyConfig& cfg) {
  CocCell cell{entry.name, std::string(to_string(method.rule)), std::nullopt, std::nullopt, std::nullopt, {}};
  if (method.rule == StepRule::King) cell.beta = method.beta;
  Rational x = entry.scalar_start;
  std::vector<Rational> errors{abs(x - entry.zero)};
  try {
    for (std::size_t k = 0; k < cfg.max_steps; ++k) {
      if (errors.size() >= 3 && errors[errors.size() - 3] <= cfg.smallness) break;
      if (sgn(errors.back()) == 0) break;
      x = apply(method, entry.f, x);
      errors.push_back(abs(x - entry.zero));
    }
  } catch (const Error& e) {
    cell.note = e.what();
    return cell;
  }
  measure(cell, errors, cfg.smallness);
  return cell;
}

CocStudyReport coc_study(const std::vector<CorpusEntry>& corpus, const CocStudyConfig& cfg) {
  cfg.validate();
  CocStudyReport report;
  report.config = cfg;
  for (const CorpusEntry& entry : corpus) {
    if (cfg.include_kinglike) {
      for (const Rational& beta : cfg.beta_grid) report.cells.push_back(kinglike_coc(entry, beta, cfg));
    }
    if (cfg.include_moore_newton) report.cells.push_back(moore_newton_coc(entry, cfg));
    if (cfg.include_scalar) {
      for (const Rational& beta : cfg.beta_grid) report.cells.push_back(scalar_coc(entry, ScalarMethod::king(beta), cfg));
      report.cells.push_back(scalar_coc(entry, ScalarMethod::uncorrected(), cfg));
      report.cells.push_back(scalar_coc(entry, ScalarMethod::newton(), cfg));
    }
  }
  return report;
}

CocSummary CocStudyReport::summary(const std::string& method) const {
  CocSummary s;
  std::vector<double> orders;
  for (const CocCell& c : cells) {
    if (c.method != method) continue;
    ++s.cells;
    if (!c.coc) continue;
    ++s.measured;
    if (!c.coc->valid) continue;
    ++s.valid;
    orders.push_back(c.coc->order);
  }
  if (orders.empty()) return s;
  std::sort(orders.begin(), orders.end());
  s.min = orders.front();
  s.max = orders.back();
  const std::size_t n = orders.size();
  s.median = n % 2 == 1 ? orders[n / 2] : 0.5 * (orders[n / 2 - 1] + orders[n / 2]);
  return s;
}

}  // namespace ivlab::lab
