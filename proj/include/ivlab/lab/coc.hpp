#pragma once

// Computational order of convergence from three consecutive magnitudes
// e_{k-1}, e_k, e_{k+1} (interval radii or scalar errors):
//
//   r_c = log(e_{k+1} / e_k) / log(e_k / e_{k-1})
//
// The estimate is only meaningful once the magnitudes are very small.

#include <array>
#include <span>

#include "ivlab/enclosure.hpp"
#include "ivlab/point_methods.hpp"

namespace ivlab::lab {

/// 10^-20.
Rational default_smallness();

struct CocMeasurement {
  std::array<Rational, 3> magnitudes;  // e_{k-1}, e_k, e_{k+1}
  double order = 0;
  bool valid = false;  // e_{k-1} <= smallness
};

/// Uses the last three consecutive entries that are strictly positive and
/// strictly decreasing. Throws ZeroRadius when the sequence ends in 0 (exact
/// convergence) and InsufficientTrace when no such triple exists.
CocMeasurement computational_order(std::span<const Rational> magnitudes, const Rational& smallness);

/// On rd(X_0), rd(X_1), ... of the trace.
template <class T>
CocMeasurement computational_order(const EnclosureTrace<T>& trace, const Rational& smallness);

/// On |x_k - zero| of the trace.
CocMeasurement computational_order(const ScalarTrace& trace, const Rational& zero, const Rational& smallness);

/// log(a / b) for positive rationals, evaluated in MPFR at 256 bits.
double log_ratio(const Rational& a, const Rational& b);

}  // namespace ivlab::lab
