#pragma once

#include <array>
#include <cmath>
#include <string>

#include "charvar/errors.hpp"
#include "charvar/model.hpp"
#include "charvar/scalar.hpp"

namespace charvar {

// lambda-lengths: exp of half the signed horocycle distance along each arc.
template <typename S>
using EdgeLengths = std::array<S, kNumEdges>;

// Triangle coordinates: product of the three lambda-lengths of each triangle,
// taken projectively.
template <typename S>
using Coords4 = std::array<S, kNumTris>;

template <typename S>
using Gauge = std::array<S, kNumVerts>;  // one positive scale per puncture

struct SignVector {
  std::array<int, kNumTris> val{1, 1, 1, 1};

  int operator()(Tri t) const { return val[idx(t)]; }
  int& operator()(Tri t) { return val[idx(t)]; }
  bool operator==(const SignVector& o) const { return val == o.val; }
};

// The 16 sign vectors in the notation of the component census: eps_i has a
// single -1 at triangle i, eps_ij has -1 exactly at triangles i and j.
SignVector eps_all_plus();
SignVector eps_one(Tri i);                 // Euler class +1
SignVector eps_pair(Tri i, Tri j);         // Euler class 0
SignVector negate(const SignVector& eps);  // mirror

int euler_class(const SignVector& eps);

template <typename S>
void require_positive(const EdgeLengths<S>& lambda) {
  for (const S& v : lambda)
    if (scalar_traits<S>::sign(v) <= 0)
      throw DomainError("lambda-lengths must be positive");
}

template <typename S>
void require_positive(const Coords4<S>& x) {
  for (const S& v : x)
    if (scalar_traits<S>::sign(v) <= 0)
      throw DomainError("triangle coordinates must be positive");
}

template <typename S>
Coords4<S> triangle_coords(const EdgeLengths<S>& lambda) {
  require_positive(lambda);
  const auto& model = canonical_model();
  Coords4<S> x;
  for (Tri t : all_tris) {
    const auto& e = model.tri_edges[idx(t)];
    x[idx(t)] = lambda[idx(e[0])] * lambda[idx(e[1])] * lambda[idx(e[2])];
  }
  return x;
}

template <typename S>
EdgeLengths<S> gauge_act(const Gauge<S>& mu, const EdgeLengths<S>& lambda) {
  EdgeLengths<S> out;
  for (Edge e : all_edges) {
    auto ends = edge_ends(e);
    out[idx(e)] = mu[idx(ends[0])] * lambda[idx(e)] * mu[idx(ends[1])];
  }
  return out;
}

// A section of the triangle-coordinate bundle: lambda on the edge dual to
// {ti,tj} is sqrt(Xi Xj) / (X1 X2 X3 X4)^(1/6).  Composing with
// triangle_coords returns X exactly, not just projectively.  Float backend
// (the radicals leave the rationals).
EdgeLengths<double> section(const Coords4<double>& x);

// Off-diagonal entries of the peripheral holonomies, in the row order of the
// cusp lemma.  Row r is realized by the puncture cusp_entry_vertex(r).
template <typename S>
std::array<S, 3> cusp_entries(const Coords4<S>& x, const SignVector& eps) {
  // Coefficient patterns: row r pairs X_i with eps at the Klein-four image.
  static constexpr int kRowPerm[3][4] = {
      {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::array<S, 3> out;
  for (int r = 0; r < 3; ++r) {
    S acc = scalar_traits<S>::from_int(0);
    for (int i = 0; i < 4; ++i) {
      if (eps.val[kRowPerm[r][i]] > 0)
        acc += x[i];
      else
        acc -= x[i];
    }
    out[r] = acc;
  }
  return out;
}

template <typename S>
std::array<int, 3> signs_at_cusps(const Coords4<S>& x, const SignVector& eps) {
  auto entries = cusp_entries(x, eps);
  std::array<int, 3> s;
  for (int r = 0; r < 3; ++r) {
    int sign = scalar_traits<S>::sign(entries[r]);
    if (sign == 0)
      throw DegenerateCusp("peripheral holonomy is the identity at cusp row " +
                           std::to_string(r + 1));
    s[r] = sign;
  }
  return s;
}

// Generalized triangle inequality: every coordinate at most the sum of the
// other three.
template <typename S>
bool gti_satisfied(const Coords4<S>& x) {
  S total = x[0] + x[1] + x[2] + x[3];
  for (int i = 0; i < 4; ++i) {
    // x_i <= total - x_i
    if (scalar_traits<S>::sign(total - x[i] - x[i]) < 0) return false;
  }
  return true;
}

// Index with coordinate strictly dominating the other three, or -1.
template <typename S>
int dominant_index(const Coords4<S>& x) {
  S total = x[0] + x[1] + x[2] + x[3];
  for (int i = 0; i < 4; ++i)
    if (scalar_traits<S>::sign(x[i] + x[i] - total) > 0) return i;
  return -1;
}

// Rationalized square-root triangle inequality for the pair {i,j}:
// (Xk + Xl - Xi - Xj)^2 <= 4 Xk Xl.  Exact in the rational backend.
template <typename S>
bool sq_gti_satisfied(const Coords4<S>& x, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw DomainError("sq_gti pair must be two distinct indices");
  int k = -1, l = -1;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j) (k < 0 ? k : l) = m;
  S lhs = x[k] + x[l] - x[i] - x[j];
  S rhs = x[k] * x[l];
  return scalar_traits<S>::sign(rhs + rhs + rhs + rhs - lhs * lhs) >= 0;
}

struct ComponentLabel {
  int euler = 0;
  std::array<int, 3> signs{1, 1, 1};
  // For |euler| = 1: "gti" or "delta{i}+"; empty otherwise.
  std::string subregion;
};

bool component_allowed(int e, const std::array<int, 3>& signs);
// The 14 nonempty (euler, signs) pairs: 6 for e = 0 and 4 each for e = +-1.
std::array<std::pair<int, std::array<int, 3>>, 14> allowed_components();

// Sign vectors with the given Euler class (6 for e=0, 4 for |e|=1, 1 for
// |e|=2).
std::vector<SignVector> sign_vectors_with_euler(int e);

template <typename S>
ComponentLabel classify(const Coords4<S>& x, const SignVector& eps) {
  require_positive(x);
  ComponentLabel label;
  label.euler = euler_class(eps);
  label.signs = signs_at_cusps(x, eps);
  if (label.euler == 1 || label.euler == -1) {
    int dom = dominant_index(x);
    label.subregion =
        dom < 0 ? "gti" : "delta" + std::to_string(dom + 1) + "+";
  }
  return label;
}

}  // namespace charvar
