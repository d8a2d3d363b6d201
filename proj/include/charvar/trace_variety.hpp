#pragma once

#include <array>
#include <string>

#include "charvar/errors.hpp"
#include "charvar/scalar.hpp"

namespace charvar {

// Trace coordinates on the relation variety: (a,b,c,d) are the imaginary
// parts of the traces of the four 1-sided generators, (x,y,z) the traces of
// the three peripheral products.
template <typename S>
struct TraceCoords {
  S a, b, c, d;
  S x, y, z;
};

template <typename S>
S relation_residual(const TraceCoords<S>& t) {
  return -t.a * t.a - t.b * t.b - t.c * t.c - t.d * t.d + t.x * t.x +
         t.y * t.y + t.z * t.z + (t.a * t.b + t.c * t.d) * t.x +
         (t.a * t.d + t.b * t.c) * t.y + (t.a * t.c + t.b * t.d) * t.z +
         t.a * t.b * t.c * t.d + t.x * t.y * t.z -
         scalar_traits<S>::from_int(4);
}

template <typename S>
bool is_normalized(const TraceCoords<S>& t) {
  S two = scalar_traits<S>::from_int(2);
  return scalar_traits<S>::sign(t.x - two) == 0 &&
         scalar_traits<S>::sign(t.y - two) == 0 &&
         scalar_traits<S>::sign(t.z - two) == 0;
}

// On the x = y = z = 2 slice the relation is quadratic in each variable with
// root sum (product of the other three) + 2 (sum of the other three); the
// Vieta flip swaps the two roots.  An exact involution preserving the
// residual identically.
template <typename S>
TraceCoords<S> vieta_flip(const TraceCoords<S>& t, char var) {
  if (!is_normalized(t))
    throw DomainError("vieta flip needs the x = y = z = 2 normalization");
  TraceCoords<S> out = t;
  S two = scalar_traits<S>::from_int(2);
  switch (var) {
    case 'a':
      out.a = t.b * t.c * t.d + two * (t.b + t.c + t.d) - t.a;
      break;
    case 'b':
      out.b = t.a * t.c * t.d + two * (t.a + t.c + t.d) - t.b;
      break;
    case 'c':
      out.c = t.a * t.b * t.d + two * (t.a + t.b + t.d) - t.c;
      break;
    case 'd':
      out.d = t.a * t.b * t.c + two * (t.a + t.b + t.c) - t.d;
      break;
    default:
      throw DomainError("vieta flip variable must be one of a,b,c,d");
  }
  return out;
}

// Central character: replacing one generator's lift by its negative flips
// that trace, the dependent trace d, and the two peripheral products meeting
// the generator.  The D move is the composite of the other three.
template <typename S>
TraceCoords<S> central_character(const TraceCoords<S>& t, char generator) {
  TraceCoords<S> out = t;
  switch (generator) {
    case 'a':
      out.a = -t.a;
      out.d = -t.d;
      out.x = -t.x;
      out.z = -t.z;
      break;
    case 'b':
      out.b = -t.b;
      out.d = -t.d;
      out.x = -t.x;
      out.y = -t.y;
      break;
    case 'c':
      out.c = -t.c;
      out.d = -t.d;
      out.y = -t.y;
      out.z = -t.z;
      break;
    case 'd':
      out.a = -t.a;
      out.b = -t.b;
      out.c = -t.c;
      out.d = -t.d;
      break;
    default:
      throw DomainError("central character generator must be one of a,b,c,d");
  }
  return out;
}

// Benedetto-Goldman sign criterion: the product of the peripheral traces,
// positive on the Euler class +-1 normalized charts.
template <typename S>
int euler_sign_bg(const TraceCoords<S>& t) {
  auto pm2 = [](const S& v) {
    return scalar_traits<S>::sign(v + scalar_traits<S>::from_int(2)) == 0 ||
           scalar_traits<S>::sign(v - scalar_traits<S>::from_int(2)) == 0;
  };
  if (!pm2(t.x) || !pm2(t.y) || !pm2(t.z))
    throw DomainError("peripheral traces must be +-2");
  int s = scalar_traits<S>::sign(t.x) * scalar_traits<S>::sign(t.y) *
          scalar_traits<S>::sign(t.z);
  return s;
}

// Solves the normalized relation for d given (a, b, c):
// d^2 - [2(a+b-c) + (ab+4)c] d + (a+b-c)^2 - 4(ab+4) = 0.
// branch 0 takes the +sqrt root.  Exact backend requires a perfect-square
// discriminant.
TraceCoords<double> solve_d(double a, double b, double c, int branch);
TraceCoords<Rat> solve_d(const Rat& a, const Rat& b, const Rat& c, int branch);

// Traces of the six pair curves, -(v w + 2) for the six products of distinct
// generator traces; the elliptic twist path is available exactly when one
// lies strictly inside (-2, 2).
template <typename S>
std::array<S, 6> pair_curve_traces(const TraceCoords<S>& t) {
  S two = scalar_traits<S>::from_int(2);
  return {-(t.a * t.b + two), -(t.c * t.d + two), -(t.b * t.c + two),
          -(t.a * t.d + two), -(t.a * t.c + two), -(t.b * t.d + two)};
}

template <typename S>
bool elliptic_twist_available(const TraceCoords<S>& t) {
  S two = scalar_traits<S>::from_int(2);
  for (const S& v : pair_curve_traces(t))
    if (scalar_traits<S>::sign(v + two) > 0 &&
        scalar_traits<S>::sign(two - v) > 0)
      return true;
  return false;
}

}  // namespace charvar
