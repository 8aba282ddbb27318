// ivlab: command-line front end for the enclosure methods and experiments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ivlab/enclosure.hpp"
#include "ivlab/error.hpp"
#include "ivlab/lab/coc_study.hpp"
#include "ivlab/lab/corpus.hpp"
#include "ivlab/lab/examples.hpp"
#include "ivlab/lab/figures.hpp"
#include "ivlab/lab/report.hpp"
#include "ivlab/lab/study.hpp"

namespace {

using namespace ivlab;
using nlohmann::json;

constexpr int kConfigError = 2;

struct Common {
  std::string mode = "exact";
  unsigned precision = kDefaultFloatDigits;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_mode) {
  c.mode = default_mode;
  cmd->add_option("--mode", c.mode, "Numeric mode")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  cmd->add_option("--precision", c.precision, "Float-mode working precision in significant digits")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw Error(ErrorCode::ConfigInvalid, "cannot open '" + c.out + "' for writing");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Rational> parse_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_decimal(item));
  if (out.empty()) throw Error(ErrorCode::ConfigInvalid, "empty list '" + csv + "'");
  return out;
}

std::vector<Rational> parse_betas(const std::string& text) {
  return text == "default" ? lab::default_beta_grid() : parse_list(text);
}

// ---- enclose -------------------------------------------------------------

struct EncloseArgs {
  Common common;
  std::string poly;
  std::string x0;
  std::string method = "king-like";
  std::string beta = "0";
  std::string zero;
  std::string tol = "1e-50";
  std::size_t max_iter = 40;
};

template <class T>
std::string run_enclose(const EncloseArgs& a, unsigned precision) {
  const Polynomial p = Polynomial::parse(a.poly);
  const Interval<Rational> x0 = parse_interval(a.x0);
  const BracketedFunction f = check_bracket(p, x0);
  const Method method = parse_method(a.method);
  const Rational beta = parse_decimal(a.beta);
  const MethodSpec spec{method, method == Method::MooreNewton ? Rational(0) : beta};
  std::optional<Rational> zero;
  if (!a.zero.empty()) zero = parse_decimal(a.zero);
  const auto trace = run_enclosure<T>(spec, f, convert<T>(x0), parse_decimal(a.tol), a.max_iter, zero);
  const lab::TraceContext context{p.to_string(), parse_mode(a.common.mode), precision, zero};
  if (a.common.format == "json") return dump(lab::trace_json(trace, context));
  if (a.common.format == "csv") return lab::trace_csv(trace);
  return lab::trace_text(trace, context);
}

void enclose(const EncloseArgs& a) {
  if (parse_mode(a.common.mode) == NumericMode::Exact) {
    emit(a.common, run_enclose<Rational>(a, 0));
  } else {
    WorkingPrecision precision(a.common.precision);
    emit(a.common, run_enclose<BigFloat>(a, a.common.precision));
  }
}

// ---- example -------------------------------------------------------------

struct ExampleArgs {
  Common common;
  std::string which = "1";
};

void example(const ExampleArgs& a) {
  const NumericMode mode = parse_mode(a.common.mode);
  std::optional<WorkingPrecision> precision;
  if (mode == NumericMode::Float) precision.emplace(a.common.precision);
  std::vector<lab::ExampleReport> reports;
  if (a.which == "all") {
    reports.push_back(lab::reproduce_example(lab::Example::One, mode));
    reports.push_back(lab::reproduce_example(lab::Example::Two, mode));
  } else {
    reports.push_back(lab::reproduce_example(lab::parse_example(a.which), mode));
  }
  if (a.common.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(lab::example_json(r));
    emit(a.common, dump(reports.size() == 1 ? arr[0] : arr));
    return;
  }
  std::string text;
  for (const auto& r : reports) {
    if (a.common.format == "csv") {
      text += "example,quantity,expected,computed,pass\n";
      for (const auto& row : r.rows) {
        text += std::string(lab::to_string(r.which)) + ",\"" + row.quantity + "\",\"" + row.expected + "\",\"" +
                row.computed + "\"," + (row.pass ? "true" : "false") + "\n";
      }
    } else {
      text += lab::example_text(r);
    }
  }
  emit(a.common, text);
}

// ---- study ---------------------------------------------------------------

struct StudyArgs {
  Common common;
  bool full = false;
  std::optional<std::size_t> experiments;
  std::optional<std::size_t> polys;
  std::string betas = "default";
  std::uint64_t seed = 1;
  std::string x0 = "[0.6, 3]";
  std::optional<std::string> tol;
  std::optional<std::size_t> max_iter;
  unsigned threads = 0;
};

void study(const StudyArgs& a) {
  lab::StudyConfig cfg = a.full ? lab::StudyConfig::full_protocol() : lab::StudyConfig::smoke();
  if (a.experiments) cfg.n_experiments = *a.experiments;
  if (a.polys) cfg.n_polynomials = *a.polys;
  cfg.beta_grid = parse_betas(a.betas);
  cfg.master_seed = a.seed;
  cfg.x0 = parse_interval(a.x0);
  cfg.mode = parse_mode(a.common.mode);
  cfg.precision_digits = a.common.precision;
  if (a.tol) cfg.tol = parse_decimal(*a.tol);
  if (a.max_iter) cfg.max_iter = *a.max_iter;
  cfg.threads = a.threads;
  const lab::StudyReport report = lab::failure_rate_study(cfg);
  if (a.common.format == "json") {
    emit(a.common, dump(lab::study_json(report)));
  } else if (a.common.format == "csv") {
    emit(a.common, lab::study_csv(report));
  } else {
    emit(a.common, lab::study_text(report));
  }
}

// ---- coc -----------------------------------------------------------------

struct CocArgs {
  Common common;
  std::string betas = "default";
  std::size_t steps = 5;
  std::string smallness = "1e-20";
  std::string methods = "all";
  std::string corpus = "quadratic";
};

void coc(const CocArgs& a) {
  lab::CocStudyConfig cfg = lab::CocStudyConfig::defaults();
  cfg.beta_grid = parse_betas(a.betas);
  cfg.mode = parse_mode(a.common.mode);
  cfg.precision_digits = a.common.precision;
  cfg.kinglike_steps = a.steps;
  cfg.smallness = parse_decimal(a.smallness);
  if (a.methods != "all") {
    cfg.include_kinglike = a.methods.find("king-like") != std::string::npos;
    cfg.include_moore_newton = a.methods.find("moore-newton") != std::string::npos;
    cfg.include_scalar = a.methods.find("scalar") != std::string::npos;
    if (!cfg.include_kinglike && !cfg.include_moore_newton && !cfg.include_scalar) {
      throw Error(ErrorCode::ConfigInvalid, "--methods takes king-like, moore-newton and/or scalar");
    }
  }
  const auto& corpus = a.corpus == "cubic" ? lab::cubic_corpus() : lab::test_corpus();
  const lab::CocStudyReport report = lab::coc_study(corpus, cfg);
  if (a.common.format == "json") {
    emit(a.common, dump(lab::coc_json(report)));
  } else if (a.common.format == "csv") {
    emit(a.common, lab::coc_csv(report));
  } else {
    emit(a.common, lab::coc_text(report));
  }
}

// ---- figure --------------------------------------------------------------

struct FigureArgs {
  Common common;
  std::string which = "1";
  int samples = 201;
};

void figure(const FigureArgs& a) { emit(a.common, dump(lab::figure_data(lab::parse_figure(a.which), a.samples))); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval root enclosure: Moore-Newton and the KingLike/ThreePoint methods"};
  app.require_subcommand(1);

  EncloseArgs enclose_args;
  auto* enclose_cmd = app.add_subcommand("enclose", "Run one method on one function and interval, print the trace");
  add_common(enclose_cmd, enclose_args.common, "exact");
  enclose_cmd->add_option("--poly", enclose_args.poly, "Ascending coefficients, e.g. \"-12,0,1,1\"")->required();
  enclose_cmd->add_option("--x0", enclose_args.x0, "Initial interval, e.g. \"[0.5, 2.1]\"")->required();
  enclose_cmd->add_option("--method", enclose_args.method, "moore-newton | king-like | three-point")
      ->capture_default_str();
  enclose_cmd->add_option("--beta", enclose_args.beta, "Method parameter")->capture_default_str();
  enclose_cmd->add_option("--zero", enclose_args.zero, "Known zero for the membership audit");
  enclose_cmd->add_option("--tol", enclose_args.tol, "Stop when the radius is at most this")->capture_default_str();
  enclose_cmd->add_option("--max-iter", enclose_args.max_iter, "Step limit")->capture_default_str();

  ExampleArgs example_args;
  auto* example_cmd = app.add_subcommand("example", "Reproduce the published counterexamples");
  add_common(example_cmd, example_args.common, "exact");
  example_cmd->add_option("which", example_args.which, "1, 2 or all")->capture_default_str();

  StudyArgs study_args;
  auto* study_cmd = app.add_subcommand("study", "Randomized KingLike failure-rate study");
  add_common(study_cmd, study_args.common, "float");
  study_cmd->add_flag("--full", study_args.full, "Full protocol: 20 experiments x 100 polynomials");
  study_cmd->add_option("--experiments", study_args.experiments, "Number of experiments (default 2)");
  study_cmd->add_option("--polys", study_args.polys, "Polynomials per experiment (default 20)");
  study_cmd->add_option("--betas", study_args.betas, "\"default\" or a comma list")->capture_default_str();
  study_cmd->add_option("--seed", study_args.seed, "Master seed")->capture_default_str();
  study_cmd->add_option("--x0", study_args.x0, "Initial interval")->capture_default_str();
  study_cmd->add_option("--tol", study_args.tol, "Radius tolerance (default 1e-300)");
  study_cmd->add_option("--max-iter", study_args.max_iter, "Step limit per trial (default 40)");
  study_cmd->add_option("--threads", study_args.threads, "Worker threads, 0 for all cores")->capture_default_str();

  CocArgs coc_args;
  auto* coc_cmd = app.add_subcommand("coc", "Computational order of convergence on the test corpus");
  add_common(coc_cmd, coc_args.common, "exact");
  coc_cmd->add_option("--betas", coc_args.betas, "\"default\" or a comma list")->capture_default_str();
  coc_cmd->add_option("--corpus", coc_args.corpus, "quadratic or cubic")
      ->check(CLI::IsMember({"quadratic", "cubic"}))
      ->capture_default_str();
  coc_cmd->add_option("--steps", coc_args.steps, "KingLike steps per cell")->capture_default_str();
  coc_cmd->add_option("--smallness", coc_args.smallness, "Validity threshold")->capture_default_str();
  coc_cmd->add_option("--methods", coc_args.methods, "all, or any of king-like,moore-newton,scalar")
      ->capture_default_str();

  FigureArgs figure_args;
  auto* figure_cmd = app.add_subcommand("figure", "Emit plot data for figure 1 or 2 (JSON)");
  add_common(figure_cmd, figure_args.common, "exact");
  figure_cmd->add_option("which", figure_args.which, "1 or 2")->capture_default_str();
  figure_cmd->add_option("--samples", figure_args.samples, "Curve samples")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*enclose_cmd) enclose(enclose_args);
    if (*example_cmd) example(example_args);
    if (*study_cmd) study(study_args);
    if (*coc_cmd) coc(coc_args);
    if (*figure_cmd) figure(figure_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ivlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return 0;
}
