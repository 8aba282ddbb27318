#include <doctest.h>

#include <cmath>
#include <set>

#include "generators.hpp"
#include "ivlab/error.hpp"
#include "ivlab/lab/coc.hpp"
#include "ivlab/lab/coc_study.hpp"
#include "ivlab/lab/corpus.hpp"
#include "ivlab/lab/examples.hpp"
#include "ivlab/lab/figures.hpp"
#include "ivlab/lab/report.hpp"
#include "ivlab/lab/rng.hpp"
#include "ivlab/lab/study.hpp"

using namespace ivlab;
using namespace ivlab::lab;

namespace {

Rational pow10_neg(unsigned e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, e);
  return Rational(mpz_class(1), den);
}

// e_k = 10^-(p^k) scaled to start at 10^-base.
std::vector<Rational> synthetic(unsigned base, unsigned p, int count) {
  std::vector<Rational> out;
  unsigned e = base;
  for (int i = 0; i < count; ++i, e *= p) out.push_back(pow10_neg(e));
  return out;
}

StudyConfig tiny_study(unsigned threads) {
  StudyConfig cfg = StudyConfig::smoke();
  cfg.n_experiments = 2;
  cfg.n_polynomials = 3;
  cfg.beta_grid = {Rational(-2), Rational(0), Rational(5, 2)};
  cfg.precision_digits = 120;
  cfg.tol = pow10_neg(40);
  cfg.max_iter = 12;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_SUITE("rng") {
  TEST_CASE("SplitMix64 reference values") {
    // First outputs for seed 0 of the reference implementation.
    SplitMix64 g(0);
    CHECK(g.next() == 0xe220a8397b1dcdafULL);
    CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(g.next() == 0x06c45d188009454fULL);
  }

  TEST_CASE("derived seeds are deterministic and distinct") {
    CHECK(derive_seed(7, {1, 2, 3}) == derive_seed(7, {1, 2, 3}));
    std::set<std::uint64_t> seen;
    for (std::uint64_t e = 0; e < 20; ++e) {
      for (std::uint64_t p = 0; p < 100; ++p) seen.insert(derive_seed(1, {e, p, 0}));
    }
    CHECK(seen.size() == 2000);
    CHECK(derive_seed(1, {0, 1}) != derive_seed(1, {1, 0}));
    CHECK(derive_seed(1, {0}) != derive_seed(2, {0}));
  }

  TEST_CASE("uniform_dyadic lies in (0, 1) with denominator dividing 2^53") {
    SplitMix64 g(42);
    mpz_class two53 = 1;
    two53 <<= 53;
    double sum = 0;
    for (int i = 0; i < 2000; ++i) {
      const Rational u = uniform_dyadic(g);
      CHECK(sgn(u) > 0);
      CHECK(u < 1);
      CHECK(mpz_divisible_p(two53.get_mpz_t(), u.get_den_mpz_t()));
      sum += to_double(u);
    }
    CHECK(std::abs(sum / 2000 - 0.5) < 0.03);
  }
}

TEST_SUITE("coc") {
  TEST_CASE("quadratic sequence gives order 2") {
    const std::vector<Rational> e{pow10_neg(4), pow10_neg(8), pow10_neg(16)};
    const CocMeasurement m = computational_order(e, default_smallness());
    CHECK(m.order == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(m.valid);
  }

  TEST_CASE("synthetic sequences recover p") {
    for (unsigned p : {2u, 3u, 4u}) {
      CAPTURE(p);
      const CocMeasurement m = computational_order(synthetic(25, p, 4), default_smallness());
      CHECK(std::abs(m.order - p) <= 1e-6);
      CHECK(m.valid);
    }
  }

  TEST_CASE("non-integral ratios") {
    // e_{k+1} = C e_k^p with C = 3 and p = 3; r_c -> 3 as e -> 0.
    std::vector<Rational> e{pow10_neg(30)};
    for (int i = 0; i < 3; ++i) e.push_back(3 * e.back() * e.back() * e.back());
    const CocMeasurement m = computational_order(e, default_smallness());
    CHECK(std::abs(m.order - 3) < 1e-2);
  }

  TEST_CASE("uses the last decreasing triple") {
    std::vector<Rational> e = synthetic(25, 3, 3);
    e.push_back(e.back());  // stagnation is not part of a decreasing triple
    const CocMeasurement m = computational_order(e, default_smallness());
    CHECK(std::abs(m.order - 3) <= 1e-6);
    CHECK(m.magnitudes[2] == pow10_neg(225));
  }

  TEST_CASE("error conditions") {
    const std::vector<Rational> zero_end{pow10_neg(2), pow10_neg(4), Rational(0)};
    CHECK_THROWS_WITH_AS(computational_order(zero_end, default_smallness()), doctest::Contains("ZeroRadius"), Error);
    const std::vector<Rational> short_seq{pow10_neg(2), pow10_neg(4)};
    CHECK_THROWS_WITH_AS(computational_order(short_seq, default_smallness()), doctest::Contains("InsufficientTrace"),
                         Error);
    const std::vector<Rational> increasing{pow10_neg(4), pow10_neg(2), Rational(1)};
    CHECK_THROWS_AS(computational_order(increasing, default_smallness()), Error);
  }

  TEST_CASE("Moore-Newton on x^2 - 4 is quadratic") {
    const BracketedFunction f = check_bracket(Polynomial::parse("-4, 0, 1"), parse_interval("[1, 4]"));
    const CorpusEntry entry{"x^2 - 4", f, Rational(2), Rational(3)};
    CocStudyConfig cfg = CocStudyConfig::defaults();
    const CocCell cell = moore_newton_coc(entry, cfg);
    REQUIRE(cell.coc);
    CHECK(cell.coc->valid);
    CHECK(std::abs(cell.coc->order - 2) < 0.3);
  }

  TEST_CASE("scalar King on a quadratic at beta = -1/2 has order 5") {
    // The King error constant (1 + 2b) c2^3 - c2 c3 vanishes when c3 = 0 and
    // b = -1/2, so the method gains an order on quadratics.
    const BracketedFunction f = check_bracket(Polynomial::parse("-4, 0, 1"), parse_interval("[1.3, 2.6]"));
    const CorpusEntry entry{"x^2 - 4", f, Rational(2), Rational(5, 2)};
    CocStudyConfig cfg = CocStudyConfig::defaults();
    const CocCell half = scalar_coc(entry, ScalarMethod::king(Rational(-1, 2)), cfg);
    REQUIRE(half.coc);
    CHECK(std::abs(half.coc->order - 5) < 0.1);
    const CocCell zero = scalar_coc(entry, ScalarMethod::king(Rational(0)), cfg);
    REQUIRE(zero.coc);
    CHECK(std::abs(zero.coc->order - 4) < 0.1);
  }

  TEST_CASE("KingLike cells that lose the zero are excluded") {
    const BracketedFunction f = check_bracket(Polynomial::parse("-12, 0, 1, 1"), parse_interval("[0.5, 2.1]"));
    const CorpusEntry entry{"x^3 + x^2 - 12", f, Rational(2), Rational(2)};
    const CocCell cell = kinglike_coc(entry, Rational(0), CocStudyConfig::defaults());
    CHECK(cell.outcome == Outcome::InclusionLost);
    CHECK_FALSE(cell.coc);
    CHECK(cell.note.find("excluded") != std::string::npos);
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("entries are valid and hold their zero") {
    for (const auto* corpus : {&test_corpus(), &cubic_corpus()}) {
      CHECK(corpus->size() == 20);
      for (const auto& e : *corpus) {
        CAPTURE(e.name);
        CHECK(sgn(e.f.f()(e.zero)) == 0);
        CHECK(e.f.domain().contains(e.zero));
        CHECK(e.f.domain().contains(e.scalar_start));
        CHECK_FALSE(interval_eval(e.f.second_derivative(), e.f.domain()).contains_zero());
      }
    }
    for (const auto& e : test_corpus()) CHECK(e.f.f().degree() == 2);
    for (const auto& e : cubic_corpus()) CHECK(e.f.f().degree() == 3);
  }

  TEST_CASE("scalar King has order 4 at every beta on the cubic corpus") {
    CocStudyConfig cfg = CocStudyConfig::defaults();
    for (const auto& e : cubic_corpus()) {
      CAPTURE(e.name);
      for (const Rational& beta : {Rational(-1, 2), Rational(2)}) {
        const CocCell cell = scalar_coc(e, ScalarMethod::king(beta), cfg);
        REQUIRE(cell.coc);
        CHECK(cell.coc->valid);
        CHECK(std::abs(cell.coc->order - 4) < 0.1);
      }
    }
  }

  TEST_CASE("default beta grid") {
    const auto grid = default_beta_grid();
    REQUIRE(grid.size() == 10);
    CHECK(grid.front() == -2);
    CHECK(grid.back() == Rational(5, 2));
  }
}

TEST_SUITE("study") {
  TEST_CASE("study polynomial has the fixed zero and degree 7") {
    SexticCoefficients a;
    for (int i = 0; i < 6; ++i) a[i] = ratio(i + 1, 8);
    const Polynomial p = study_polynomial(a);
    CHECK(p.degree() == 7);
    CHECK(sgn(p(Rational(1))) == 0);
    CHECK(p.coefficient(7) == 1);
    CHECK(p.coefficient(0) == -a[0]);
  }

  TEST_CASE("draws are reproducible and accepted on X0") {
    const Interval<Rational> x0 = parse_interval("[0.6, 3]");
    const DrawnPolynomial d1 = draw_polynomial(9, 3, 4, x0);
    const DrawnPolynomial d2 = draw_polynomial(9, 3, 4, x0);
    CHECK(d1.a == d2.a);
    CHECK(d1.redraws == d2.redraws);
    CHECK(d1.f.domain() == x0);
    CHECK(draw_polynomial(9, 3, 5, x0).a != d1.a);
  }

  TEST_CASE("config validation") {
    StudyConfig cfg = tiny_study(1);
    CHECK_NOTHROW(cfg.validate());
    cfg.n_polynomials = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = tiny_study(1);
    cfg.beta_grid.clear();
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = tiny_study(1);
    cfg.x0 = parse_interval("[1.5, 3]");
    CHECK_THROWS_AS(cfg.validate(), Error);
    CHECK(StudyConfig::full_protocol().trials_per_experiment() == 1000);
    CHECK(StudyConfig::full_protocol().n_experiments == 20);
  }

  TEST_CASE("report does not depend on thread count") {
    const StudyReport one = failure_rate_study(tiny_study(1));
    const StudyReport three = failure_rate_study(tiny_study(3));
    CHECK(study_json(one).dump() == study_json(three).dump());
    CHECK(study_csv(one) == study_csv(three));
    CHECK(one.trials.size() == 18);
    std::size_t failures = 0;
    for (const auto& t : one.trials) failures += t.failed();
    CHECK(failures == one.witnesses.size());
    double mean = 0;
    for (const auto& e : one.experiments) mean += e.failure_percent;
    CHECK(one.mean_percent == doctest::Approx(mean / one.experiments.size()));
  }

  TEST_CASE("witnesses replay to the recorded outcome") {
    const StudyConfig cfg = tiny_study(1);
    const StudyReport report = failure_rate_study(cfg);
    for (const Witness& w : report.witnesses) {
      const TrialResult r = replay_witness(w, cfg);
      CHECK(r.outcome == w.outcome);
      CHECK(r.outcome_step == w.outcome_step);
    }
  }

  TEST_CASE("linear functions never lose the zero") {
    // KingLike on a linear f: md(Y) is the zero after one Newton stage.
    testing::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
      const Rational zero = gen.rational(4, 16);
      const Rational slope = gen.coin() ? gen.between(Rational(1, 4), Rational(4)) : -gen.between(Rational(1, 4), Rational(4));
      const Polynomial p({-slope * zero, slope});
      const Interval<Rational> x0 = Interval<Rational>::make(zero - gen.between(Rational(1, 8), Rational(3)),
                                                             zero + gen.between(Rational(1, 8), Rational(3)));
      const BracketedFunction f = check_bracket(p, x0);
      const auto trace = run_enclosure<Rational>(MethodSpec::king_like(Rational(0)), f, x0, Rational(0), 5, zero);
      CHECK_FALSE(is_inclusion_failure(trace.outcome));
      CHECK(trace.outcome == Outcome::ZeroFound);
    }
  }
}

TEST_SUITE("examples") {
  TEST_CASE("both examples reproduce in both modes") {
    for (Example which : {Example::One, Example::Two}) {
      for (NumericMode mode : {NumericMode::Exact, NumericMode::Float}) {
        const ExampleReport r = reproduce_example(which, mode);
        CAPTURE(to_string(which));
        for (const auto& row : r.rows) {
          CAPTURE(row.quantity);
          CHECK(row.pass);
        }
        CHECK(example_json(r)["all_pass"] == true);
      }
    }
  }
}

TEST_SUITE("figures") {
  TEST_CASE("fig1 slope lines and candidate") {
    const nlohmann::json j = figure_data(Figure::Fig1, 11);
    CHECK(j["slope_lines"][0]["slope"]["exact"] == "2");
    CHECK(j["slope_lines"][1]["slope"]["exact"] == "8");
    CHECK(j["candidate"]["lo"]["exact"] == "1.375");
    CHECK(j["candidate"]["hi"]["exact"] == "2.21875");
    CHECK(j["curve"]["x"].size() == 11);
  }

  TEST_CASE("fig2 correction factor and verdict") {
    const nlohmann::json j = figure_data(Figure::Fig2);
    const Rational t = parse_decimal(j["b"]["t"]["exact"].get<std::string>());
    const Rational c = parse_decimal(j["b"]["c"]["exact"].get<std::string>());
    CHECK(c == 1 - 2 * t);
    CHECK(j["b"]["contains_zero"] == false);
    CHECK(j["a"]["candidate"]["hi"]["exact"] == "5.936");
  }
}

TEST_SUITE("report") {
  TEST_CASE("trace json") {
    const BracketedFunction f = check_bracket(Polynomial::parse("-12, 0, 1, 1"), parse_interval("[0.5, 2.1]"));
    const auto trace = run_enclosure<Rational>(MethodSpec::king_like(Rational(0)), f, f.domain(), pow10_neg(20), 10,
                                               Rational(2));
    const nlohmann::json j = trace_json(trace, TraceContext{f.f().to_string(), NumericMode::Exact, 0, Rational(2)});
    CHECK(j["outcome"] == "InclusionLost");
    CHECK(j["outcome_step"] == 0);
    REQUIRE(j["steps"].size() == 1);
    const auto& s = j["steps"][0];
    CHECK(s["known_zero_inside"] == false);
    CHECK(s["sign_change_ok"] == false);
    CHECK(s["audits"].size() == 2);
    CHECK(s.contains("newton"));
    CHECK(s.contains("king"));
    CHECK(s["x"].is_array());
    CHECK(s["x"].size() == 2);
    const std::string text = trace_text(trace, TraceContext{f.f().to_string(), NumericMode::Exact, 0, Rational(2)});
    CHECK(text.find("InclusionLost") != std::string::npos);
    CHECK(trace_csv(trace).find('\n') != std::string::npos);
  }

  TEST_CASE("interval json rounds outward") {
    WorkingPrecision precision(40);
    const Interval<Rational> third = Interval<Rational>::point(Rational(1, 3));
    const nlohmann::json j = interval_json(third);
    const Rational lo = parse_decimal(j[0].get<std::string>());
    const Rational hi = parse_decimal(j[1].get<std::string>());
    CHECK(lo < Rational(1, 3));
    CHECK(hi > Rational(1, 3));
  }
}
