#include "charvar/omega.hpp"

#include <cmath>

namespace charvar {

double rotation_number_estimate(const std::vector<OmegaPoint<double>>& orbit) {
  if (orbit.size() < 16)
    throw ShortOrbit("rotation number estimate needs at least 16 points");
  double k = ellipse_k(orbit.front());
  if (!(k > -2.0 && k < 2.0))
    throw DomainError("orbit is not on an elliptic level set");
  // center of the conic c^2 - k c d + d^2 - 2c - 2d + 1 = const
  double center = 2.0 / (2.0 - k);
  double su = std::sqrt(1.0 - k / 2.0);
  double sv = std::sqrt(1.0 + k / 2.0);
  auto angle = [&](const OmegaPoint<double>& p) {
    double u = p.c - center, v = p.d - center;
    // principal axes of the form: (u+v)/sqrt2, (u-v)/sqrt2
    double pp = (u + v) * M_SQRT1_2 * su;
    double qq = (u - v) * M_SQRT1_2 * sv;
    return std::atan2(qq, pp);
  };
  double sum = 0;
  for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
    double delta = angle(orbit[i + 1]) - angle(orbit[i]);
    while (delta <= -M_PI) delta += 2 * M_PI;
    while (delta > M_PI) delta -= 2 * M_PI;
    sum += delta;
  }
  return std::fabs(sum / (2 * M_PI * (orbit.size() - 1)));
}

}  // namespace charvar
