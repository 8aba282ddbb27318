#include <doctest.h>

#include "checks.hpp"
#include "generators.hpp"
#include "ivlab/enclosure.hpp"

using namespace ivlab;
using namespace ivlab::testing;

namespace {

void report(const CheckTally& t) {
  for (const auto& v : t.violations) MESSAGE(v);
  CHECK(t.violation_count() == 0);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("containment soundness of arithmetic and interval Horner") {
    const CheckTally t = containment_soundness(101, 20000);
    CHECK(t.checks >= 20000);
    report(t);
  }

  TEST_CASE("restriction axiom and tightness in exact mode") { report(restriction_axiom(202, 5000)); }

  TEST_CASE("intersect and hull are symmetric and bracket their inputs") {
    Gen gen(303);
    for (int i = 0; i < 2000; ++i) {
      const Interval<Rational> a = gen.interval();
      const Interval<Rational> b = gen.interval();
      const auto h = hull(a, b);
      CHECK(h == hull(b, a));
      CHECK(a.subset_of(h));
      CHECK(b.subset_of(h));
      const auto ab = intersect(a, b);
      const auto ba = intersect(b, a);
      REQUIRE(ab.has_value() == ba.has_value());
      if (ab) {
        CHECK(*ab == *ba);
        CHECK(ab->subset_of(a));
        CHECK(ab->subset_of(b));
      } else {
        CHECK((a.hi() < b.lo() || b.hi() < a.lo()));
      }
    }
  }

  TEST_CASE("derivative_range encloses f' on random points") {
    Gen gen(404);
    for (int i = 0; i < 1000; ++i) {
      const Polynomial p = gen.polynomial(6);
      const Interval<Rational> x = gen.interval(3, 16);
      const Polynomial dp = p.derivative();
      const Interval<Rational> r = derivative_range(dp, dp.derivative(), x);
      CHECK(r.subset_of(interval_eval(dp, x)));
      WorkingPrecision precision(25);
      // Float mode may bisect differently, so only pointwise containment is
      // compared.
      const Interval<BigFloat> rf = derivative_range(dp, dp.derivative(), convert<BigFloat>(x));
      for (int k = 0; k < 5; ++k) {
        const Rational at = gen.between(x.lo(), x.hi());
        CHECK(r.contains(dp(at)));
        CHECK(contains(rf, dp(at)));
      }
    }
  }

  TEST_CASE("float Newton stage encloses the exact one on dyadic brackets") {
    // Dyadic endpoints convert exactly and md(X) is exact in both modes, so
    // the two Newton stages evaluate the same expression. Later stages start
    // from md(Y), which float mode rounds, so they are not comparable.
    Gen gen(505);
    const auto& corpus = lab::test_corpus();
    // Multiple of 2^-12, rounded up or down.
    auto dyadic = [](const Rational& q, bool up) {
      const Rational s = q * 4096;
      mpz_class n;
      if (up) {
        mpz_cdiv_q(n.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
      } else {
        mpz_fdiv_q(n.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
      }
      return Rational(n) / 4096;
    };
    for (int i = 0; i < 200; ++i) {
      const auto& e = corpus[static_cast<std::size_t>(i) % corpus.size()];
      const Rational lo = dyadic(gen.between(e.f.domain().lo(), e.zero), true);
      const Rational hi = dyadic(gen.between(e.zero, e.f.domain().hi()), false);
      if (!(lo < e.zero && e.zero < hi)) continue;
      const auto x = Interval<Rational>::make(lo, hi);
      const Interval<Rational> exact = newton_operator(e.f, x, midpoint(x));
      WorkingPrecision precision(40);
      const auto xf = convert<BigFloat>(x);
      REQUIRE(to_rational(xf) == x);
      const Interval<BigFloat> fl = newton_operator(e.f, xf, midpoint(xf));
      CHECK(exact.subset_of(to_rational(fl)));
      CHECK(contains(fl, e.zero));
    }
  }

  TEST_CASE("Moore-Newton keeps the zero on random sub-brackets") {
    const InclusionSuiteResult r = moore_newton_inclusion_suite(606, 100, Rational(mpz_class(1), mpz_class("1" + std::string(50, '0'))), 12);
    CHECK(r.runs == 120);
    report(r.tally);
  }

  TEST_CASE("sign-change witness agrees with known-zero membership") {
    // For a simple zero of a monotone f the two audits are equivalent.
    Gen gen(707);
    const auto& corpus = lab::test_corpus();
    std::size_t lost = 0;
    for (int i = 0; i < 400; ++i) {
      const auto& e = corpus[static_cast<std::size_t>(i) % corpus.size()];
      const Rational beta = ratio(gen.integer(-4, 5), 2);
      const auto r = kinglike_step(e.f, e.f.domain(), beta, e.zero);
      if (r.status != StepStatus::Ok) continue;
      REQUIRE(r.known_zero_inside.has_value());
      CHECK(r.sign_change_ok == *r.known_zero_inside);
      lost += r.inclusion_lost();
    }
    CHECK(lost > 0);
  }
}
