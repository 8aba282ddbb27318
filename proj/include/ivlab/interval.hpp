#pragma once

// Closed real intervals [lo, hi] over either scalar mode.
//
// Exact mode (Rational) returns exact ranges for + - * /. Float mode
// (BigFloat) rounds every lower endpoint down and every upper endpoint up, so
// a float result always contains the exact result for the same inputs.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "ivlab/error.hpp"
#include "ivlab/scalar.hpp"

namespace ivlab {

template <class T>
class Interval {
 public:
  using value_type = T;

  /// [0, 0].
  Interval() = default;

  /// [lo, hi]; throws InvalidBounds when lo > hi.
  static Interval make(T lo, T hi) {
    if (cmp(lo, hi) > 0) {
      throw Error(ErrorCode::InvalidBounds,
                  "lower bound " + format_decimal(lo, 17) + " exceeds upper bound " + format_decimal(hi, 17));
    }
    return Interval(std::move(lo), std::move(hi));
  }

  /// [lo, hi] for bounds already known to be ordered (arithmetic results).
  static Interval ordered(T lo, T hi) { return Interval(std::move(lo), std::move(hi)); }

  static Interval point(T x) {
    T copy = x;
    return Interval(std::move(x), std::move(copy));
  }

  /// [min(a,b), max(a,b)].
  static Interval hull(const T& a, const T& b) {
    return cmp(a, b) <= 0 ? Interval(a, b) : Interval(b, a);
  }

  /// Tightest enclosure of an exact rational at this mode's precision.
  static Interval enclose(const Rational& q) {
    return Interval(from_rational<T>(q, Round::Down), from_rational<T>(q, Round::Up));
  }

  const T& lo() const { return lo_; }
  const T& hi() const { return hi_; }

  bool is_point() const { return equal(lo_, hi_); }
  bool contains_zero() const { return sign(lo_) <= 0 && sign(hi_) >= 0; }
  bool contains(const T& x) const { return cmp(lo_, x) <= 0 && cmp(x, hi_) <= 0; }
  bool subset_of(const Interval& other) const {
    return cmp(other.lo_, lo_) <= 0 && cmp(hi_, other.hi_) <= 0;
  }
  bool strictly_positive() const { return sign(lo_) > 0; }
  bool strictly_negative() const { return sign(hi_) < 0; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return equal(a.lo_, b.lo_) && equal(a.hi_, b.hi_);
  }

 private:
  Interval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  T lo_;
  T hi_;
};

/// Membership of an exact rational; exact comparison in both modes.
template <class T>
bool contains(const Interval<T>& x, const Rational& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    return x.contains(value);
  } else {
    return cmp(x.lo(), value) <= 0 && cmp(x.hi(), value) >= 0;
  }
}

template <class T>
bool contains(const Interval<T>& x, const T& value) requires(!std::is_same_v<T, Rational>) {
  return x.contains(value);
}

/// md(X) = (lo + hi) / 2. Exact in exact mode; nearest (and inside X) in float mode.
template <class T>
T midpoint(const Interval<T>& x) {
  return half_sum(x.lo(), x.hi());
}

/// rd(X) = (hi - lo) / 2. Exact in exact mode; rounded up in float mode.
template <class T>
T radius(const Interval<T>& x) {
  return half_diff(x.hi(), x.lo(), Round::Up);
}

/// X ∩ Y, or nullopt for the empty set.
template <class T>
std::optional<Interval<T>> intersect(const Interval<T>& x, const Interval<T>& y) {
  const T& lo = max_of(x.lo(), y.lo());
  const T& hi = min_of(x.hi(), y.hi());
  if (cmp(lo, hi) > 0) return std::nullopt;
  return Interval<T>::make(lo, hi);
}

template <class T>
Interval<T> operator-(const Interval<T>& a) {
  return Interval<T>::ordered(neg(a.hi()), neg(a.lo()));
}

template <class T>
Interval<T> operator+(const Interval<T>& a, const Interval<T>& b) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (a.is_point() && b.is_point()) return Interval<T>::point(add(a.lo(), b.lo(), Round::Nearest));
  }
  return Interval<T>::ordered(add(a.lo(), b.lo(), Round::Down), add(a.hi(), b.hi(), Round::Up));
}

template <class T>
Interval<T> operator-(const Interval<T>& a, const Interval<T>& b) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (a.is_point() && b.is_point()) return Interval<T>::point(sub(a.lo(), b.lo(), Round::Nearest));
  }
  return Interval<T>::ordered(sub(a.lo(), b.hi(), Round::Down), sub(a.hi(), b.lo(), Round::Up));
}

template <class T>
Interval<T> operator*(const Interval<T>& a, const Interval<T>& b) {
  // Point times interval (Horner at a point, scalar factors) needs one
  // product per bound.
  if constexpr (std::is_same_v<T, Rational>) {
    if (a.is_point() && b.is_point()) return Interval<T>::point(mul(a.lo(), b.lo(), Round::Nearest));
  }
  if (a.is_point() || b.is_point()) {
    const Interval<T>& p = a.is_point() ? a : b;
    const Interval<T>& o = a.is_point() ? b : a;
    if (sign(p.lo()) >= 0) {
      return Interval<T>::ordered(mul(p.lo(), o.lo(), Round::Down), mul(p.lo(), o.hi(), Round::Up));
    }
    return Interval<T>::ordered(mul(p.lo(), o.hi(), Round::Down), mul(p.lo(), o.lo(), Round::Up));
  }
  // Sign-class case table; only the both-straddling case compares products.
  const T& al = a.lo();
  const T& ah = a.hi();
  const T& bl = b.lo();
  const T& bh = b.hi();
  const int sa = sign(al) >= 0 ? 1 : (sign(ah) <= 0 ? -1 : 0);
  const int sb = sign(bl) >= 0 ? 1 : (sign(bh) <= 0 ? -1 : 0);
  auto make = [](const T& x0, const T& y0, const T& x1, const T& y1) {
    return Interval<T>::ordered(mul(x0, y0, Round::Down), mul(x1, y1, Round::Up));
  };
  switch (sa * 3 + sb) {
    case 4: return make(al, bl, ah, bh);    // + +
    case 2: return make(ah, bl, al, bh);    // + -
    case 3: return make(ah, bl, ah, bh);    // + 0
    case -2: return make(al, bh, ah, bl);   // - +
    case -4: return make(ah, bh, al, bl);   // - -
    case -3: return make(al, bh, al, bl);   // - 0
    case 1: return make(al, bh, ah, bh);    // 0 +
    case -1: return make(ah, bl, al, bl);   // 0 -
    default: break;
  }
  T lo1 = mul(al, bh, Round::Down);
  T lo2 = mul(ah, bl, Round::Down);
  T hi1 = mul(al, bl, Round::Up);
  T hi2 = mul(ah, bh, Round::Up);
  return Interval<T>::ordered(cmp(lo1, lo2) <= 0 ? std::move(lo1) : std::move(lo2),
                           cmp(hi1, hi2) >= 0 ? std::move(hi1) : std::move(hi2));
}

/// Throws DivisionByZeroInterval when 0 ∈ b.
template <class T>
Interval<T> operator/(const Interval<T>& a, const Interval<T>& b) {
  if (b.contains_zero()) {
    throw Error(ErrorCode::DivisionByZeroInterval, "divisor interval contains zero");
  }
  if constexpr (std::is_same_v<T, Rational>) {
    if (a.is_point() && b.is_point()) return Interval<T>::point(div(a.lo(), b.lo(), Round::Nearest));
  }
  // With 0 ∉ b the bounds are endpoint quotients chosen by sign.
  const T& al = a.lo();
  const T& ah = a.hi();
  const T& bl = b.lo();
  const T& bh = b.hi();
  if (sign(bl) > 0) {
    return Interval<T>::ordered(div(al, sign(al) >= 0 ? bh : bl, Round::Down),
                             div(ah, sign(ah) >= 0 ? bl : bh, Round::Up));
  }
  return Interval<T>::ordered(div(ah, sign(ah) <= 0 ? bl : bh, Round::Down),
                           div(al, sign(al) <= 0 ? bh : bl, Round::Up));
}

template <class T>
Interval<T> operator+(const Interval<T>& a, const T& b) { return a + Interval<T>::point(b); }
template <class T>
Interval<T> operator+(const T& a, const Interval<T>& b) { return Interval<T>::point(a) + b; }
template <class T>
Interval<T> operator-(const Interval<T>& a, const T& b) { return a - Interval<T>::point(b); }
template <class T>
Interval<T> operator-(const T& a, const Interval<T>& b) { return Interval<T>::point(a) - b; }
template <class T>
Interval<T> operator*(const Interval<T>& a, const T& b) { return a * Interval<T>::point(b); }
template <class T>
Interval<T> operator*(const T& a, const Interval<T>& b) { return Interval<T>::point(a) * b; }
template <class T>
Interval<T> operator/(const Interval<T>& a, const T& b) { return a / Interval<T>::point(b); }
template <class T>
Interval<T> operator/(const T& a, const Interval<T>& b) { return Interval<T>::point(a) / b; }

/// Hull of two intervals (smallest interval containing both).
template <class T>
Interval<T> hull(const Interval<T>& a, const Interval<T>& b) {
  return Interval<T>::make(min_of(a.lo(), b.lo()), max_of(a.hi(), b.hi()));
}

/// "[lo, hi]" with lo rounded down and hi rounded up at `digits` significant
/// digits, so the printed interval contains the true one.
template <class T>
std::string to_string(const Interval<T>& x, int digits = 25) {
  return "[" + format_decimal(x.lo(), digits, Round::Down) + ", " + format_decimal(x.hi(), digits, Round::Up) + "]";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Interval<T>& x) {
  return os << to_string(x, 17);
}

/// Parses the literal "[lo, hi]" into an exact rational interval.
Interval<Rational> parse_interval(std::string_view text);

/// Converts an exact interval to mode T, rounding outward.
template <class T>
Interval<T> convert(const Interval<Rational>& x) {
  return Interval<T>::make(from_rational<T>(x.lo(), Round::Down), from_rational<T>(x.hi(), Round::Up));
}

template <class T>
Interval<Rational> to_rational(const Interval<T>& x) {
  return Interval<Rational>::make(to_rational(x.lo()), to_rational(x.hi()));
}

}  // namespace ivlab
