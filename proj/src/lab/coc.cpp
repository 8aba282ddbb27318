#include "ivlab/lab/coc.hpp"

#include <mpfr.h>

#include <vector>

#include "ivlab/error.hpp"

namespace ivlab::lab {

Rational default_smallness() {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 20);
  return Rational(mpz_class(1), den);
}

namespace {

// log of a positive rational: log(num) - log(den). Both terms are computed
// from 256-bit roundings of huge integers, so the absolute error stays tiny
// even for million-bit operands.
void log_of(mpfr_t out, const Rational& q) {
  mpfr_t d;
  mpfr_init2(d, 256);
  mpfr_set_z(out, q.get_num_mpz_t(), MPFR_RNDN);
  mpfr_log(out, out, MPFR_RNDN);
  mpfr_set_z(d, q.get_den_mpz_t(), MPFR_RNDN);
  mpfr_log(d, d, MPFR_RNDN);
  mpfr_sub(out, out, d, MPFR_RNDN);
  mpfr_clear(d);
}

}  // namespace

double log_ratio(const Rational& a, const Rational& b) {
  mpfr_t la, lb;
  mpfr_inits2(256, la, lb, static_cast<mpfr_ptr>(nullptr));
  log_of(la, a);
  log_of(lb, b);
  mpfr_sub(la, la, lb, MPFR_RNDN);
  const double out = mpfr_get_d(la, MPFR_RNDN);
  mpfr_clears(la, lb, static_cast<mpfr_ptr>(nullptr));
  return out;
}

CocMeasurement computational_order(std::span<const Rational> e, const Rational& smallness) {
  if (!e.empty() && sgn(e.back()) == 0) {
    throw Error(ErrorCode::ZeroRadius, "sequence reaches 0 after " + std::to_string(e.size() - 1) +
                                           " steps; the iteration converged exactly");
  }
  for (std::size_t i = e.size(); i >= 3; --i) {
    const Rational& a = e[i - 3];
    const Rational& b = e[i - 2];
    const Rational& c = e[i - 1];
    if (sgn(c) <= 0 || !(c < b) || !(b < a)) continue;
    CocMeasurement m;
    m.magnitudes = {a, b, c};
    mpfr_t num, den;
    mpfr_inits2(256, num, den, static_cast<mpfr_ptr>(nullptr));
    mpfr_t la, lb, lc;
    mpfr_inits2(256, la, lb, lc, static_cast<mpfr_ptr>(nullptr));
    log_of(la, a);
    log_of(lb, b);
    log_of(lc, c);
    mpfr_sub(num, lc, lb, MPFR_RNDN);
    mpfr_sub(den, lb, la, MPFR_RNDN);
    mpfr_div(num, num, den, MPFR_RNDN);
    m.order = mpfr_get_d(num, MPFR_RNDN);
    mpfr_clears(num, den, la, lb, lc, static_cast<mpfr_ptr>(nullptr));
    m.valid = a <= smallness;
    return m;
  }
  throw Error(ErrorCode::InsufficientTrace,
              "need three consecutive positive, strictly decreasing magnitudes; got " + std::to_string(e.size()) +
                  " entries");
}

template <class T>
CocMeasurement computational_order(const EnclosureTrace<T>& trace, const Rational& smallness) {
  std::vector<Rational> radii;
  for (const T& r : trace.radii()) radii.push_back(to_rational(r));
  return computational_order(std::span<const Rational>(radii), smallness);
}

CocMeasurement computational_order(const ScalarTrace& trace, const Rational& zero, const Rational& smallness) {
  std::vector<Rational> errors;
  for (const Rational& x : trace.iterates) errors.push_back(abs(x - zero));
  return computational_order(std::span<const Rational>(errors), smallness);
}

template CocMeasurement computational_order(const EnclosureTrace<Rational>&, const Rational&);
template CocMeasurement computational_order(const EnclosureTrace<BigFloat>&, const Rational&);

}  // namespace ivlab::lab
