#include "charvar/coords.hpp"

#include <vector>

namespace charvar {

SignVector eps_all_plus() { return SignVector{}; }

SignVector eps_one(Tri i) {
  SignVector eps;
  eps(i) = -1;
  return eps;
}

SignVector eps_pair(Tri i, Tri j) {
  if (i == j) throw DomainError("eps_pair needs distinct triangles");
  SignVector eps;
  eps(i) = -1;
  eps(j) = -1;
  return eps;
}

SignVector negate(const SignVector& eps) {
  SignVector out = eps;
  for (int& v : out.val) v = -v;
  return out;
}

int euler_class(const SignVector& eps) {
  int sum = 0;
  for (int v : eps.val) {
    if (v != 1 && v != -1) throw DomainError("triangle signs must be +-1");
    sum += v;
  }
  return sum / 2;
}

EdgeLengths<double> section(const Coords4<double>& x) {
  require_positive(x);
  double root = std::pow(x[0] * x[1] * x[2] * x[3], 1.0 / 6.0);
  EdgeLengths<double> lambda;
  for (Edge e : all_edges) {
    auto d = dual_pair(e);
    lambda[idx(e)] = std::sqrt(x[idx(d[0])] * x[idx(d[1])]) / root;
  }
  return lambda;
}

bool component_allowed(int e, const std::array<int, 3>& signs) {
  int plus = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) return false;
    if (s == 1) ++plus;
  }
  switch (e) {
    case 0:
      return plus == 1 || plus == 2;
    case 1:
      return plus == 2 || plus == 3;
    case -1:
      return plus == 0 || plus == 1;
    default:
      return false;  // census covers the non-maximal classes only
  }
}

std::array<std::pair<int, std::array<int, 3>>, 14> allowed_components() {
  std::array<std::pair<int, std::array<int, 3>>, 14> out;
  int n = 0;
  for (int e : {0, 1, -1})
    for (int mask = 0; mask < 8; ++mask) {
      std::array<int, 3> s;
      for (int i = 0; i < 3; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
      if (component_allowed(e, s)) out[n++] = {e, s};
    }
  return out;
}

std::vector<SignVector> sign_vectors_with_euler(int e) {
  std::vector<SignVector> out;
  for (int mask = 0; mask < 16; ++mask) {
    SignVector eps;
    for (int i = 0; i < 4; ++i) eps.val[i] = (mask >> i) & 1 ? 1 : -1;
    if (euler_class(eps) == e) out.push_back(eps);
  }
  return out;
}

}  // namespace charvar
