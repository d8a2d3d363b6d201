#include "charvar/trace_variety.hpp"

#include <cmath>

namespace charvar {

TraceCoords<double> solve_d(double a, double b, double c, int branch) {
  double sum = 2 * (a + b - c) + (a * b + 4) * c;
  double prod = (a + b - c) * (a + b - c) - 4 * (a * b + 4);
  double disc = sum * sum - 4 * prod;
  if (disc < 0) throw NoRealSolution("negative discriminant");
  double root = std::sqrt(disc);
  double d = branch == 0 ? (sum + root) / 2 : (sum - root) / 2;
  return {a, b, c, d, 2.0, 2.0, 2.0};
}

TraceCoords<Rat> solve_d(const Rat& a, const Rat& b, const Rat& c, int branch) {
  Rat sum = 2 * (a + b - c) + (a * b + 4) * c;
  Rat prod = (a + b - c) * (a + b - c) - 4 * (a * b + 4);
  Rat disc = sum * sum - 4 * prod;
  if (sgn(disc) < 0) throw NoRealSolution("negative discriminant");
  // exact square root of a rational, if it exists
  mpz_class num = disc.get_num(), den = disc.get_den();
  mpz_class rn, rd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    throw NoRealSolution("discriminant is not a rational square");
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat root(rn, rd);
  root.canonicalize();
  Rat d = branch == 0 ? Rat((sum + root) / 2) : Rat((sum - root) / 2);
  return {a, b, c, d, Rat(2), Rat(2), Rat(2)};
}

}  // namespace charvar
