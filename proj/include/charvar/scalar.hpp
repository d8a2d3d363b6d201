#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "charvar/errors.hpp"

namespace charvar {

// Exact backend. mpq_class arithmetic keeps results canonical as long as the
// inputs are canonical, so only raw construction needs care; use rat() below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q", "p", or a plain decimal such as "0.25".
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& q);

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static int sign(const Rat& x) { return sgn(x); }
  static Rat from_int(long n) { return rat(n); }
  static double to_double(const Rat& x) { return x.get_d(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
  static double from_int(long n) { return static_cast<double>(n); }
  static double to_double(double x) { return x; }
};

// Three-way comparison against a scalar threshold. The float backend treats
// values within tol of the threshold as equal; the exact backend compares
// strictly and ignores tol.
template <typename S>
int cmp_with_tol(const S& value, const S& threshold, double tol) {
  if constexpr (scalar_traits<S>::exact) {
    (void)tol;
    return cmp(value, threshold);
  } else {
    double diff = static_cast<double>(value) - static_cast<double>(threshold);
    if (std::fabs(diff) <= tol) return 0;
    return diff > 0 ? 1 : -1;
  }
}

inline constexpr double kDefaultTolerance = 1e-9;

}  // namespace charvar
