#pragma once

#include <vector>

#include "charvar/errors.hpp"
#include "charvar/scalar.hpp"

namespace charvar {

// Point of the Euler-class-0 slice: coordinates (a, 1-a, c, d) with
// a in (0,1) and c, d > 0; c + d != 1 off the degenerate boundary.
template <typename S>
struct OmegaPoint {
  S a, c, d;
};

// The two triangle switches fixing the slice act as Vieta involutions on the
// conics (c + d - 1)^2 = (k + 2) c d.
template <typename S>
OmegaPoint<S> omega_s3(const OmegaPoint<S>& p) {
  if (scalar_traits<S>::sign(p.c) == 0)
    throw DivByZero("s3 needs c != 0");
  S dm = p.d - scalar_traits<S>::from_int(1);
  return {p.a, dm * dm / p.c, p.d};
}

template <typename S>
OmegaPoint<S> omega_s4(const OmegaPoint<S>& p) {
  if (scalar_traits<S>::sign(p.d) == 0)
    throw DivByZero("s4 needs d != 0");
  S cm = p.c - scalar_traits<S>::from_int(1);
  return {p.a, p.c, cm * cm / p.d};
}

// Conic invariant: k = (c + d - 1)^2 / (c d) - 2; the level set is an
// ellipse exactly for k in (-2, 2).
template <typename S>
S ellipse_k(const OmegaPoint<S>& p) {
  if (scalar_traits<S>::sign(p.c) == 0 || scalar_traits<S>::sign(p.d) == 0)
    throw DivByZero("ellipse invariant needs c d != 0");
  S t = p.c + p.d - scalar_traits<S>::from_int(1);
  return t * t / (p.c * p.d) - scalar_traits<S>::from_int(2);
}

// n iterates of the twist s3 . s4 (s4 first), including the start point:
// n + 1 entries.
template <typename S>
std::vector<OmegaPoint<S>> twist34_orbit(const OmegaPoint<S>& p, int n) {
  std::vector<OmegaPoint<S>> orbit{p};
  orbit.reserve(n + 1);
  for (int i = 0; i < n; ++i)
    orbit.push_back(omega_s3(omega_s4(orbit.back())));
  return orbit;
}

// Average angular increment of an orbit on its invariant ellipse, in turns.
// The ellipse is mapped to a circle by the affine normalization of the conic
// form c^2 - k c d + d^2 - 2c - 2d + 1; throws ShortOrbit below 16 points.
double rotation_number_estimate(const std::vector<OmegaPoint<double>>& orbit);

}  // namespace charvar
