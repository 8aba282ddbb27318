#include "ivlab/polynomial.hpp"

#include <mpfr.h>

#include <sstream>

#include "ivlab/error.hpp"

namespace ivlab {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  for (const auto& c : coeffs_) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), c.get_den_mpz_t());
  scaled_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) scaled_.push_back(c.get_num() * (scale_ / c.get_den()));
}

Polynomial Polynomial::parse(std::string_view csv) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string_view::npos ? csv.size() : comma;
    coeffs.push_back(parse_decimal(csv.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

const Rational& Polynomial::coefficient(std::size_t i) const {
  static const Rational zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rational Polynomial::operator()(const Rational& x) const {
  if (coeffs_.empty()) return Rational(0);
  // p(a/b) = (sum_i C_i a^i b^(n-i)) / (L b^n) with C_i = L c_i integral.
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  const std::size_t n = scaled_.size() - 1;
  mpz_class acc = scaled_[n];
  mpz_class b_pow = 1;
  for (std::size_t i = n; i-- > 0;) {
    b_pow *= b;
    acc *= a;
    if (sgn(scaled_[i]) != 0) acc += scaled_[i] * b_pow;
  }
  Rational out(acc, scale_ * b_pow);
  out.canonicalize();
  return out;
}

int Polynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  const std::size_t size_bits = mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  for (mpfr_prec_t prec = 128; static_cast<std::size_t>(prec) < 4 * size_bits + 256; prec *= 4) {
    mpfr_t lo, hi, xl, xh, cl, ch, t1, t2, t3, t4;
    for (mpfr_ptr v : {lo, hi, xl, xh, cl, ch, t1, t2, t3, t4}) mpfr_init2(v, prec);
    mpfr_set_q(xl, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(xh, x.get_mpq_t(), MPFR_RNDU);
    mpfr_set_q(lo, coeffs_.back().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, coeffs_.back().get_mpq_t(), MPFR_RNDU);
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      // [lo, hi] * [xl, xh]: min/max over the endpoint products.
      mpfr_mul(t1, lo, xl, MPFR_RNDD);
      mpfr_mul(t2, lo, xh, MPFR_RNDD);
      mpfr_mul(t3, hi, xl, MPFR_RNDD);
      mpfr_mul(t4, hi, xh, MPFR_RNDD);
      mpfr_min(t1, t1, t2, MPFR_RNDD);
      mpfr_min(t3, t3, t4, MPFR_RNDD);
      mpfr_min(cl, t1, t3, MPFR_RNDD);
      mpfr_mul(t1, lo, xl, MPFR_RNDU);
      mpfr_mul(t2, lo, xh, MPFR_RNDU);
      mpfr_mul(t3, hi, xl, MPFR_RNDU);
      mpfr_mul(t4, hi, xh, MPFR_RNDU);
      mpfr_max(t1, t1, t2, MPFR_RNDU);
      mpfr_max(t3, t3, t4, MPFR_RNDU);
      mpfr_max(ch, t1, t3, MPFR_RNDU);
      mpfr_set_q(t1, coeffs_[i].get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(t2, coeffs_[i].get_mpq_t(), MPFR_RNDU);
      mpfr_add(lo, cl, t1, MPFR_RNDD);
      mpfr_add(hi, ch, t2, MPFR_RNDU);
    }
    const int s = mpfr_sgn(lo) > 0 ? 1 : (mpfr_sgn(hi) < 0 ? -1 : 0);
    for (mpfr_ptr v : {lo, hi, xl, xh, cl, ch, t1, t2, t3, t4}) mpfr_clear(v);
    if (s != 0) return s;
  }
  return sgn((*this)(x));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string format_exact(const Rational& q) {
  mpz_class den = q.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str();
  // A terminating decimal needs max(twos, fives) fractional digits and the
  // integer part's digits; format_decimal with that many significant digits
  // is then exact.
  const int digits = static_cast<int>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) + static_cast<int>(std::max(twos, fives)) + 2;
  return format_decimal(q, digits, Round::Nearest);
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || i == 0) os << format_exact(mag);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::string Polynomial::to_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += format_exact(coeffs_[i]);
  }
  return out;
}

}  // namespace ivlab
