#pragma once

// Scalar types for the two numeric modes.
//
//   Rational  exact arbitrary-precision rational (gmpxx mpq_class); every
//             operation is exact and the rounding argument is ignored.
//   BigFloat  MPFR binary float carrying its own precision; every operation
//             is correctly rounded in the requested direction.
//
// Generic code is written against the free functions below (add, sub, mul,
// div, cmp, ...), overloaded for both types, so that interval arithmetic can
// be instantiated once per mode.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ivlab {

using Rational = mpq_class;

/// num / den in canonical form. mpq_class(num, den) does not reduce, and
/// GMP arithmetic on unreduced operands is undefined.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

enum class Round { Down, Up, Nearest };

enum class NumericMode { Exact, Float };

std::string_view to_string(NumericMode mode);
NumericMode parse_mode(std::string_view text);

class BigFloat {
 public:
  /// Zero at the calling thread's working precision.
  BigFloat();
  BigFloat(const Rational& q, Round r);
  explicit BigFloat(long v);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Run-level working precision for BigFloat values created on this thread.
/// Scoped: the previous precision is restored on destruction.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned decimal_digits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static mpfr_prec_t bits();
  static unsigned digits();

 private:
  mpfr_prec_t saved_bits_;
  unsigned saved_digits_;
};

inline constexpr unsigned kDefaultFloatDigits = 1000;

// ---- exact mode --------------------------------------------------------

Rational add(const Rational& a, const Rational& b, Round);
Rational sub(const Rational& a, const Rational& b, Round);
Rational mul(const Rational& a, const Rational& b, Round);
Rational div(const Rational& a, const Rational& b, Round);
Rational neg(const Rational& a);
Rational half_sum(const Rational& a, const Rational& b);
Rational half_diff(const Rational& a, const Rational& b, Round);
int cmp(const Rational& a, const Rational& b);
/// Equality without cross-multiplication (operands are canonical).
inline bool equal(const Rational& a, const Rational& b) { return mpq_equal(a.get_mpq_t(), b.get_mpq_t()) != 0; }
int sign(const Rational& a);
Rational to_rational(const Rational& a);

// ---- float mode --------------------------------------------------------

BigFloat add(const BigFloat& a, const BigFloat& b, Round r);
BigFloat sub(const BigFloat& a, const BigFloat& b, Round r);
BigFloat mul(const BigFloat& a, const BigFloat& b, Round r);
BigFloat div(const BigFloat& a, const BigFloat& b, Round r);
BigFloat neg(const BigFloat& a);
/// (a + b) / 2 rounded to nearest; lies in [min(a,b), max(a,b)].
BigFloat half_sum(const BigFloat& a, const BigFloat& b);
/// (a - b) / 2 rounded in direction r.
BigFloat half_diff(const BigFloat& a, const BigFloat& b, Round r);
int cmp(const BigFloat& a, const BigFloat& b);
inline bool equal(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
int sign(const BigFloat& a);
/// Exact conversion (every binary float is a dyadic rational).
Rational to_rational(const BigFloat& a);

// ---- mixed -------------------------------------------------------------

int cmp(const BigFloat& a, const Rational& b);

template <class T>
T from_rational(const Rational& q, Round r);

template <>
inline Rational from_rational<Rational>(const Rational& q, Round) {
  return q;
}

template <>
inline BigFloat from_rational<BigFloat>(const Rational& q, Round r) {
  return BigFloat(q, r);
}

template <class T>
inline T from_int(long v) {
  return from_rational<T>(Rational(v), Round::Nearest);
}

template <class T>
inline bool is_zero(const T& a) {
  return sign(a) == 0;
}

template <class T>
inline const T& min_of(const T& a, const T& b) {
  return cmp(b, a) < 0 ? b : a;
}

template <class T>
inline const T& max_of(const T& a, const T& b) {
  return cmp(b, a) > 0 ? b : a;
}

// ---- text --------------------------------------------------------------

/// Parses "1.3", "-8.113", "1e-50", "2.5E3", "13/10" (ASCII or U+2212 minus)
/// into an exact rational. Throws Error(ParseError).
Rational parse_decimal(std::string_view text);

/// Formats q with at most `digits` significant decimal digits. Down/Up give
/// a decimal that is <= / >= q; Nearest rounds half away from zero.
std::string format_decimal(const Rational& q, int digits, Round r = Round::Nearest);

template <class T>
std::string format_decimal(const T& x, int digits, Round r = Round::Nearest) {
  return format_decimal(to_rational(x), digits, r);
}

double to_double(const Rational& q);
double to_double(const BigFloat& x);

}  // namespace ivlab
