#include "ivlab/scalar.hpp"

#include <cmath>
#include <string>

#include "ivlab/error.hpp"

namespace ivlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::DivisionByZeroInterval: return "DivisionByZeroInterval";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::DerivativeZero: return "DerivativeZero";
    case ErrorCode::CorrectionDenominatorZero: return "CorrectionDenominatorZero";
    case ErrorCode::DerivativeStraddlesZero: return "DerivativeStraddlesZero";
    case ErrorCode::InsufficientTrace: return "InsufficientTrace";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::Exact ? "exact" : "float";
}

NumericMode parse_mode(std::string_view text) {
  if (text == "exact") return NumericMode::Exact;
  if (text == "float") return NumericMode::Float;
  throw Error(ErrorCode::ConfigInvalid, "unknown numeric mode '" + std::string(text) + "'");
}

namespace {

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::Down: return MPFR_RNDD;
    case Round::Up: return MPFR_RNDU;
    case Round::Nearest: return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

mpfr_prec_t digits_to_bits(unsigned digits) {
  // log2(10) = 3.3219...; a few guard bits keep `digits` decimal digits honest.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

thread_local unsigned tls_digits = kDefaultFloatDigits;
thread_local mpfr_prec_t tls_bits = digits_to_bits(kDefaultFloatDigits);

}  // namespace

// ---- BigFloat ------------------------------------------------------------

BigFloat::BigFloat() {
  mpfr_init2(value_, tls_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, Round r) {
  mpfr_init2(value_, tls_bits);
  mpfr_set_q(value_, q.get_mpq_t(), to_mpfr(r));
}

BigFloat::BigFloat(long v) {
  mpfr_init2(value_, tls_bits);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

WorkingPrecision::WorkingPrecision(unsigned decimal_digits)
    : saved_bits_(tls_bits), saved_digits_(tls_digits) {
  if (decimal_digits == 0) throw Error(ErrorCode::ConfigInvalid, "precision must be positive");
  tls_digits = decimal_digits;
  tls_bits = digits_to_bits(decimal_digits);
}

WorkingPrecision::~WorkingPrecision() {
  tls_bits = saved_bits_;
  tls_digits = saved_digits_;
}

mpfr_prec_t WorkingPrecision::bits() { return tls_bits; }
unsigned WorkingPrecision::digits() { return tls_digits; }

// ---- exact ---------------------------------------------------------------

Rational add(const Rational& a, const Rational& b, Round) { return a + b; }
Rational sub(const Rational& a, const Rational& b, Round) { return a - b; }
Rational mul(const Rational& a, const Rational& b, Round) { return a * b; }
Rational div(const Rational& a, const Rational& b, Round) { return a / b; }
Rational neg(const Rational& a) { return -a; }

Rational half_sum(const Rational& a, const Rational& b) {
  Rational s = a + b;
  mpq_div_2exp(s.get_mpq_t(), s.get_mpq_t(), 1);
  return s;
}

Rational half_diff(const Rational& a, const Rational& b, Round) {
  Rational d = a - b;
  mpq_div_2exp(d.get_mpq_t(), d.get_mpq_t(), 1);
  return d;
}

int cmp(const Rational& a, const Rational& b) {
  const int c = mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
  return (c > 0) - (c < 0);
}

int sign(const Rational& a) { return sgn(a); }
Rational to_rational(const Rational& a) { return a; }

// ---- float ---------------------------------------------------------------

namespace {

mpfr_prec_t result_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

template <class Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Round r, Op op) {
  BigFloat out;
  mpfr_set_prec(out.get(), result_prec(a, b));
  op(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

}  // namespace

BigFloat add(const BigFloat& a, const BigFloat& b, Round r) { return binary(a, b, r, mpfr_add); }
BigFloat sub(const BigFloat& a, const BigFloat& b, Round r) { return binary(a, b, r, mpfr_sub); }
BigFloat mul(const BigFloat& a, const BigFloat& b, Round r) { return binary(a, b, r, mpfr_mul); }
BigFloat div(const BigFloat& a, const BigFloat& b, Round r) { return binary(a, b, r, mpfr_div); }

BigFloat neg(const BigFloat& a) {
  BigFloat out(a);
  mpfr_neg(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat half_sum(const BigFloat& a, const BigFloat& b) {
  BigFloat s = add(a, b, Round::Nearest);
  mpfr_div_2ui(s.get(), s.get(), 1, MPFR_RNDN);
  return s;
}

BigFloat half_diff(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat d = sub(a, b, r);
  mpfr_div_2ui(d.get(), d.get(), 1, to_mpfr(r));
  return d;
}

int cmp(const BigFloat& a, const BigFloat& b) {
  const int c = mpfr_cmp(a.get(), b.get());
  return (c > 0) - (c < 0);
}

int cmp(const BigFloat& a, const Rational& b) {
  const int c = mpfr_cmp_q(a.get(), b.get_mpq_t());
  return (c > 0) - (c < 0);
}

int sign(const BigFloat& a) { return mpfr_sgn(a.get()); }

Rational to_rational(const BigFloat& a) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), a.get());
  return q;
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }
double to_double(const BigFloat& x) { return mpfr_get_d(x.get(), MPFR_RNDN); }

// ---- text ----------------------------------------------------------------

Rational parse_decimal(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'"); };

  std::string s;
  s.reserve(text.size());
  // Normalize the Unicode minus sign (U+2212, UTF-8 E2 88 92) to '-'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      s.push_back(text[i]);
    }
  }
  if (s.empty()) throw fail();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse_decimal(s.substr(0, slash));
    const Rational den = parse_decimal(s.substr(slash + 1));
    if (sgn(den) == 0) throw fail();
    Rational q = num / den;
    q.canonicalize();
    return q;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';

  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char ch = s[pos];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();

  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw fail();
    ++pos;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (pos + used != s.size()) throw fail();
  }

  mpz_class mantissa(digits, 10);
  const long scale = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale >= 0 ? Rational(mantissa * pow10) : Rational(mantissa, pow10);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

namespace {

mpz_class pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

// Floor of log10(a) for a > 0.
long decimal_exponent(const Rational& a) {
  const long bits = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
  long e = static_cast<long>(std::floor(bits * 0.30102999566398120));
  auto ten_to = [](long k) { return k >= 0 ? Rational(pow10(k)) : Rational(mpz_class(1), pow10(-k)); };
  while (a < ten_to(e)) --e;
  while (a >= ten_to(e + 1)) ++e;
  return e;
}

}  // namespace

std::string format_decimal(const Rational& q, int digits, Round r) {
  if (digits < 1) digits = 1;
  if (sgn(q) == 0) return "0";

  const bool negative = sgn(q) < 0;
  const Rational a = abs(q);
  // Directed rounding of q maps to the opposite direction on |q| when q < 0.
  Round mag = r;
  if (negative && r != Round::Nearest) mag = (r == Round::Down) ? Round::Up : Round::Down;

  long e = decimal_exponent(a);
  auto scaled_integer = [&](long exp10) {
    const long shift = digits - 1 - exp10;
    Rational s = shift >= 0 ? Rational(a * pow10(shift)) : Rational(a / pow10(-shift));
    mpz_class n;
    if (mag == Round::Down) {
      mpz_fdiv_q(n.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    } else if (mag == Round::Up) {
      mpz_cdiv_q(n.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    } else {
      const Rational shifted = s + Rational(1, 2);
      mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    }
    return n;
  };
  mpz_class n = scaled_integer(e);
  if (n >= pow10(digits)) {
    ++e;
    n = scaled_integer(e);
  }

  std::string ds = n.get_str();
  // Trailing zeros carry no information; keep at least one digit.
  long significant = static_cast<long>(ds.size());
  while (significant > 1 && ds[static_cast<std::size_t>(significant - 1)] == '0') --significant;
  ds.resize(static_cast<std::size_t>(significant));

  std::string out = negative ? "-" : "";
  if (e >= -6 && e < digits) {
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e + 1);
      if (ds.size() <= int_len) {
        out += ds + std::string(int_len - ds.size(), '0');
      } else {
        out += ds.substr(0, int_len) + "." + ds.substr(int_len);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
  } else {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e);
  }
  return out;
}

}  // namespace ivlab
