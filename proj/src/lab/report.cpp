#include "ivlab/lab/report.hpp"

#include <cstdio>
#include <sstream>

namespace ivlab::lab {

using nlohmann::json;

namespace {

template <class T>
json optional_interval(const std::optional<Interval<T>>& x) {
  return x ? interval_json(*x) : json(nullptr);
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

template <class T>
json step_json(const StepRecord<T>& s) {
  json out;
  out["k"] = s.k;
  out["x"] = interval_json(s.x);
  out["slope"] = optional_interval(s.slope);
  out["newton"] = optional_interval(s.newton);
  out["y"] = optional_interval(s.y);
  out["king"] = optional_interval(s.king);
  out["z"] = optional_interval(s.z);
  out["t"] = optional_interval(s.t);
  out["c"] = optional_interval(s.c);
  out["candidate"] = optional_interval(s.candidate);
  out["x_next"] = optional_interval(s.x_next);
  out["zero"] = s.zero ? json(format_decimal(*s.zero, kReportDigits)) : json(nullptr);
  out["status"] = to_string(s.status);
  out["failed_stage"] = s.failed_stage ? json(to_string(*s.failed_stage)) : json(nullptr);
  out["sign_change_ok"] = s.sign_change_ok;
  out["known_zero_inside"] = optional_bool(s.known_zero_inside);
  out["inclusion_lost"] = s.inclusion_lost();
  json audits = json::array();
  for (const StageAudit& a : s.audits) {
    audits.push_back({{"stage", to_string(a.stage)},
                      {"sign_change_ok", a.sign_change_ok},
                      {"known_zero_inside", optional_bool(a.known_zero_inside)}});
  }
  out["audits"] = audits;
  return out;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

template <class T>
std::string csv_interval(const std::optional<Interval<T>>& x) {
  if (!x) return ",";
  return format_decimal(x->lo(), kReportDigits, Round::Down) + "," + format_decimal(x->hi(), kReportDigits, Round::Up);
}

}  // namespace

template <class T>
json trace_json(const EnclosureTrace<T>& trace, const TraceContext& context) {
  json out;
  out["function"] = context.function;
  out["method"] = to_string(trace.method.method);
  out["beta"] = trace.method.method == Method::MooreNewton ? json(nullptr) : json(format_exact(trace.method.beta));
  out["mode"] = to_string(context.mode);
  out["precision_digits"] = context.mode == NumericMode::Float ? json(context.precision_digits) : json(nullptr);
  out["reference_zero"] = context.reference_zero ? json(format_exact(*context.reference_zero)) : json(nullptr);
  out["outcome"] = to_string(trace.outcome);
  out["outcome_step"] = trace.outcome_step ? json(*trace.outcome_step) : json(nullptr);
  out["final_interval"] = interval_json(trace.final_interval);
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(step_json(s));
  out["steps"] = steps;
  return out;
}

template <class T>
std::string trace_text(const EnclosureTrace<T>& trace, const TraceContext& context) {
  std::ostringstream os;
  os << to_string(trace.method.method);
  if (trace.method.method != Method::MooreNewton) os << "(beta = " << format_exact(trace.method.beta) << ")";
  os << " on " << context.function << ", " << to_string(context.mode) << " mode";
  if (context.mode == NumericMode::Float) os << ", " << context.precision_digits << " digits";
  os << "\n";
  for (const auto& s : trace.steps) {
    os << "k=" << s.k << "  X=" << to_string(s.x, 17);
    if (s.x_next) os << "  X'=" << to_string(*s.x_next, 17);
    os << "  " << to_string(s.status);
    if (s.known_zero_inside) os << "  zero_inside=" << (*s.known_zero_inside ? "yes" : "NO");
    if (!s.sign_change_ok) os << "  sign_change=NO";
    if (s.failed_stage) os << "  stage=" << to_string(*s.failed_stage);
    os << "\n";
  }
  os << "outcome: " << to_string(trace.outcome);
  if (trace.outcome_step) os << " at k=" << *trace.outcome_step;
  os << "\nfinal: " << to_string(trace.final_interval, kReportDigits) << "\n";
  return os.str();
}

template <class T>
std::string trace_csv(const EnclosureTrace<T>& trace) {
  std::ostringstream os;
  os << "k,x_lo,x_hi,candidate_lo,candidate_hi,x_next_lo,x_next_hi,status,failed_stage,sign_change_ok,"
        "known_zero_inside\n";
  for (const auto& s : trace.steps) {
    os << s.k << "," << csv_interval(std::optional<Interval<T>>(s.x)) << "," << csv_interval(s.candidate) << ","
       << csv_interval(s.x_next) << "," << to_string(s.status) << ","
       << (s.failed_stage ? std::string(to_string(*s.failed_stage)) : "") << ","
       << (s.sign_change_ok ? "true" : "false") << ","
       << (s.known_zero_inside ? (*s.known_zero_inside ? "true" : "false") : "") << "\n";
  }
  return os.str();
}

template json trace_json(const EnclosureTrace<Rational>&, const TraceContext&);
template json trace_json(const EnclosureTrace<BigFloat>&, const TraceContext&);
template std::string trace_text(const EnclosureTrace<Rational>&, const TraceContext&);
template std::string trace_text(const EnclosureTrace<BigFloat>&, const TraceContext&);
template std::string trace_csv(const EnclosureTrace<Rational>&);
template std::string trace_csv(const EnclosureTrace<BigFloat>&);

json study_json(const StudyReport& r) {
  const StudyConfig& c = r.config;
  json config;
  config["experiments"] = c.n_experiments;
  config["polynomials"] = c.n_polynomials;
  config["trials_per_experiment"] = c.trials_per_experiment();
  json betas = json::array();
  for (const auto& b : c.beta_grid) betas.push_back(format_exact(b));
  config["betas"] = betas;
  config["x0"] = interval_json(c.x0);
  config["seed"] = c.master_seed;
  config["mode"] = to_string(c.mode);
  config["precision_digits"] = c.mode == NumericMode::Float ? json(c.precision_digits) : json(nullptr);
  config["tol"] = format_decimal(c.tol, 6);
  config["max_iter"] = c.max_iter;

  json experiments = json::array();
  for (std::size_t i = 0; i < r.experiments.size(); ++i) {
    const auto& e = r.experiments[i];
    experiments.push_back({{"index", i},
                           {"trials", e.trials},
                           {"failures", e.failures},
                           {"failure_percent", e.failure_percent},
                           {"redraws", e.redraws}});
  }
  json per_beta = json::array();
  for (const auto& b : r.per_beta) {
    per_beta.push_back({{"beta", format_exact(b.beta)},
                        {"trials", b.trials},
                        {"failures", b.failures},
                        {"failure_percent", b.failure_percent}});
  }
  json outcomes = json::object();
  for (const auto& [o, n] : r.outcome_counts) outcomes[std::string(to_string(o))] = n;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json a = json::array();
    for (const auto& q : w.a) a.push_back(format_exact(q));
    witnesses.push_back({{"experiment", w.experiment},
                         {"polynomial", w.polynomial},
                         {"a", a},
                         {"beta", format_exact(w.beta)},
                         {"outcome", to_string(w.outcome)},
                         {"outcome_step", w.outcome_step ? json(*w.outcome_step) : json(nullptr)}});
  }

  json out;
  out["config"] = config;
  out["experiments"] = experiments;
  out["failure_percent"] = {{"min", r.min_percent}, {"max", r.max_percent}, {"mean", r.mean_percent}};
  out["per_beta"] = per_beta;
  out["outcomes"] = outcomes;
  out["redraws"] = r.redraws;
  out["witnesses"] = witnesses;
  return out;
}

std::string study_csv(const StudyReport& r) {
  std::ostringstream os;
  os << "experiment,polynomial,beta,outcome,outcome_step,failed\n";
  for (const auto& t : r.trials) {
    os << t.experiment << "," << t.polynomial << "," << format_exact(r.config.beta_grid[t.beta_index]) << ","
       << to_string(t.outcome) << "," << (t.outcome_step ? std::to_string(*t.outcome_step) : "") << ","
       << (t.failed() ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string study_text(const StudyReport& r) {
  const StudyConfig& c = r.config;
  std::ostringstream os;
  os << "KingLike failure-rate study: " << c.n_experiments << " experiments x " << c.n_polynomials
     << " polynomials x " << c.beta_grid.size() << " betas, seed " << c.master_seed << ", " << to_string(c.mode)
     << " mode";
  if (c.mode == NumericMode::Float) os << " (" << c.precision_digits << " digits)";
  os << "\n\nexperiment  failures  percent  redraws\n";
  for (std::size_t i = 0; i < r.experiments.size(); ++i) {
    const auto& e = r.experiments[i];
    char line[96];
    std::snprintf(line, sizeof line, "%10zu  %8zu  %6.1f%%  %7zu\n", i, e.failures, e.failure_percent, e.redraws);
    os << line;
  }
  os << "\nfailure percent: min " << fixed(r.min_percent, 1) << "%, max " << fixed(r.max_percent, 1) << "%, mean "
     << fixed(r.mean_percent, 2) << "%\n\nbeta    failures  percent\n";
  for (const auto& b : r.per_beta) {
    char line[96];
    std::snprintf(line, sizeof line, "%-6s  %8zu  %6.1f%%\n", format_exact(b.beta).c_str(), b.failures,
                  b.failure_percent);
    os << line;
  }
  os << "\noutcomes:";
  for (const auto& [o, n] : r.outcome_counts) os << " " << to_string(o) << "=" << n;
  os << "\nredraws: " << r.redraws << ", witnesses: " << r.witnesses.size() << "\n";
  return os.str();
}

namespace {

json coc_measurement_json(const CocMeasurement& m) {
  json mags = json::array();
  for (const auto& q : m.magnitudes) mags.push_back(format_decimal(q, 6, Round::Up));
  return {{"order", m.order}, {"valid", m.valid}, {"magnitudes", mags}};
}

json summary_json(const CocSummary& s) {
  return {{"cells", s.cells}, {"measured", s.measured}, {"valid", s.valid},
          {"min", s.min},     {"median", s.median},     {"max", s.max}};
}

const char* const kCocMethods[] = {"king-like", "moore-newton", "king", "uncorrected", "newton"};

}  // namespace

json coc_json(const CocStudyReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    cells.push_back({{"function", c.function},
                     {"method", c.method},
                     {"beta", c.beta ? json(format_exact(*c.beta)) : json(nullptr)},
                     {"outcome", c.outcome ? json(to_string(*c.outcome)) : json(nullptr)},
                     {"coc", c.coc ? coc_measurement_json(*c.coc) : json(nullptr)},
                     {"note", c.note}});
  }
  json summary = json::object();
  for (const char* m : kCocMethods) summary[m] = summary_json(r.summary(m));
  json out;
  out["config"] = {{"mode", to_string(r.config.mode)},
                   {"precision_digits",
                    r.config.mode == NumericMode::Float ? json(r.config.precision_digits) : json(nullptr)},
                   {"kinglike_steps", r.config.kinglike_steps},
                   {"smallness", format_decimal(r.config.smallness, 6)}};
  out["summary"] = summary;
  out["cells"] = cells;
  return out;
}

std::string coc_csv(const CocStudyReport& r) {
  std::ostringstream os;
  os << "function,method,beta,outcome,order,valid,e_prev,e_mid,e_last,note\n";
  for (const auto& c : r.cells) {
    os << "\"" << c.function << "\"," << c.method << "," << (c.beta ? format_exact(*c.beta) : "") << ","
       << (c.outcome ? std::string(to_string(*c.outcome)) : "") << ",";
    if (c.coc) {
      os << fixed(c.coc->order, 6) << "," << (c.coc->valid ? "true" : "false");
      for (const auto& q : c.coc->magnitudes) os << "," << format_decimal(q, 6, Round::Up);
    } else {
      os << ",,,,";
    }
    os << ",\"" << c.note << "\"\n";
  }
  return os.str();
}

std::string coc_text(const CocStudyReport& r) {
  std::ostringstream os;
  os << "Computational order of convergence, " << to_string(r.config.mode) << " mode, smallness "
     << format_decimal(r.config.smallness, 3) << "\n\nmethod        cells  valid  min      median   max\n";
  for (const char* m : kCocMethods) {
    const CocSummary s = r.summary(m);
    if (s.cells == 0) continue;
    char line[128];
    std::snprintf(line, sizeof line, "%-12s  %5zu  %5zu  %-7s  %-7s  %-7s\n", m, s.cells, s.valid,
                  fixed(s.min, 4).c_str(), fixed(s.median, 4).c_str(), fixed(s.max, 4).c_str());
    os << line;
  }
  std::size_t excluded = 0;
  for (const auto& c : r.cells) excluded += c.method == "king-like" && !c.coc ? 1 : 0;
  os << "\nking-like cells excluded (failed or converged exactly): " << excluded << "\n";
  return os.str();
}

json example_json(const ExampleReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"quantity", row.quantity},
                    {"expected", row.expected},
                    {"computed", row.computed},
                    {"tolerance", row.tolerance ? json(format_exact(*row.tolerance)) : json(nullptr)},
                    {"pass", row.pass}});
  }
  return {{"example", to_string(r.which)},
          {"function", r.function},
          {"x0", interval_json(r.x0)},
          {"beta", format_exact(r.beta)},
          {"mode", to_string(r.mode)},
          {"rows", rows},
          {"all_pass", r.all_pass()}};
}

std::string example_text(const ExampleReport& r) {
  std::ostringstream os;
  os << to_string(r.which) << ": KingLike(" << format_exact(r.beta) << ") on " << r.function << ", X0 = "
     << to_string(r.x0, 6) << ", " << to_string(r.mode) << " mode\n";
  for (const auto& row : r.rows) {
    os << (row.pass ? "  PASS  " : "  FAIL  ") << row.quantity << ": expected " << row.expected << ", got "
       << row.computed;
    if (row.tolerance) os << " (tol " << format_exact(*row.tolerance) << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace ivlab::lab
