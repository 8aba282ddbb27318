#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivlab/interval.hpp"
#include "ivlab/scalar.hpp"

namespace ivlab {

/// Dense univariate polynomial with exact rational coefficients in ascending
/// degree order. Trailing zero coefficients are trimmed, so the leading
/// coefficient is nonzero unless this is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending)
      : Polynomial(std::vector<Rational>(ascending)) {}

  /// "-12, 0, 1, 1" is x^3 + x^2 - 12.
  static Polynomial parse(std::string_view csv);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t i) const;

  /// Exact value at x. Evaluated homogeneously over the integers with a single
  /// final reduction, which is far cheaper than rational Horner when x has a
  /// large denominator.
  Rational operator()(const Rational& x) const;

  /// Sign of p(x), certified. Tries MPFR interval evaluation at increasing
  /// precision and falls back to exact evaluation only when that cannot
  /// separate the value from zero.
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;

  /// Human-readable form, highest degree first: "x^3 + x^2 - 12".
  std::string to_string() const;
  /// Ascending comma-separated coefficients, exact ("p/q" when needed).
  std::string to_csv() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
  // coeffs_ scaled by the lcm of their denominators, and that lcm.
  std::vector<mpz_class> scaled_;
  mpz_class scale_ = 1;
};

inline Rational eval(const Polynomial& p, const Rational& x) { return p(x); }
inline Polynomial derivative(const Polynomial& p) { return p.derivative(); }

/// Interval Horner scheme: an interval extension of p. Contains the range of
/// p over x; with a point argument in exact mode the result is the point
/// [p(x), p(x)].
template <class T>
Interval<T> interval_eval(const Polynomial& p, const Interval<T>& x) {
  const auto c = p.coefficients();
  if (c.empty()) return Interval<T>::point(from_int<T>(0));
  Interval<T> acc = Interval<T>::enclose(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * x + Interval<T>::enclose(c[i]);
  }
  return acc;
}

/// Enclosure of p at a single point of mode T (the exact value in exact mode).
template <class T>
Interval<T> eval_at(const Polynomial& p, const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Interval<T>::point(p(x));
  } else {
    return interval_eval(p, Interval<T>::point(x));
  }
}

/// Exact decimal when the denominator is 2^a 5^b, "p/q" otherwise.
std::string format_exact(const Rational& q);

}  // namespace ivlab
