#pragma once

#include <optional>
#include <tuple>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/scalar.hpp"

namespace charvar {

template <typename S>
struct Mat2 {
  S m11, m12, m21, m22;

  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }
};

enum class IsomKind { Hyperbolic, Parabolic, Elliptic };

std::string isom_kind_name(IsomKind k);

template <typename S>
struct Holonomy {
  S abs_trace;
  IsomKind kind;
  std::optional<int> parabolic_sign;  // set only for parabolic classes
};

template <typename S>
IsomKind classify_kind(const S& abs_trace, double tol) {
  int c = cmp_with_tol(abs_trace, scalar_traits<S>::from_int(2), tol);
  if (c > 0) return IsomKind::Hyperbolic;
  if (c == 0) return IsomKind::Parabolic;
  return IsomKind::Elliptic;
}

// Per-triangle matrix of a standard-position pass: upper triangular for a
// left turn, lower for a right turn, with the third edge carrying the
// triangle sign.
template <typename S>
Mat2<S> turn_matrix(const CurveStep& step, const EdgeLengths<S>& lambda,
                    const SignVector& eps) {
  Edge e3 = third_edge(step.tri, step.enter, step.exit);
  S len1 = lambda[idx(step.enter)];
  S len2 = lambda[idx(step.exit)];
  S len3 = lambda[idx(e3)];
  if (eps(step.tri) < 0) len3 = -len3;
  S zero = scalar_traits<S>::from_int(0);
  if (step.turn == Turn::Left) return {len1, len3, zero, len2};
  return {len2, zero, len3, len1};
}

// Raw matrix product over the steps together with the product of crossed
// lambda-lengths; the quotient is unimodular up to sign.
template <typename S>
std::pair<Mat2<S>, S> holonomy_product(const CurveDescriptor& desc,
                                       const EdgeLengths<S>& lambda,
                                       const SignVector& eps) {
  validate_descriptor(desc);
  require_positive(lambda);
  S one = scalar_traits<S>::from_int(1);
  Mat2<S> prod{one, scalar_traits<S>::from_int(0),
               scalar_traits<S>::from_int(0), one};
  S denom = one;
  for (const CurveStep& step : desc.steps) {
    prod = prod * turn_matrix(step, lambda, eps);
    denom *= lambda[idx(step.enter)];
  }
  return {prod, denom};
}

// |tr rho(curve)| via the matrix-product trace formula.  2-sided curves only.
template <typename S>
Holonomy<S> curve_trace(const CurveDescriptor& desc,
                        const EdgeLengths<S>& lambda, const SignVector& eps,
                        double tol = kDefaultTolerance) {
  if (!desc.two_sided)
    throw BadStep("trace formula applies to 2-sided curves; use the square");
  auto [prod, denom] = holonomy_product(desc, lambda, eps);
  S tr = prod.m11 + prod.m22;
  if (scalar_traits<S>::sign(tr) < 0) tr = -tr;
  S abs_trace = tr / denom;
  Holonomy<S> out{abs_trace, classify_kind(abs_trace, tol), std::nullopt};
  if (out.kind == IsomKind::Parabolic) {
    int s = scalar_traits<S>::sign(prod.m12 - prod.m21);
    // Normalize to trace +2: negating the matrix flips the off-diagonal gap.
    if (scalar_traits<S>::sign(prod.m11 + prod.m22) < 0) s = -s;
    if (s != 0) out.parabolic_sign = s;
  }
  return out;
}

// Conjugacy-class sign of a parabolic matrix: normalize to trace +2, then
// sign(m12 - m21).  Calibrated so [[1,x],[0,1]] maps to sign(x).
template <typename S>
int parabolic_sign(const Mat2<S>& m, double tol = kDefaultTolerance) {
  S tr = m.m11 + m.m22;
  S abs_tr = scalar_traits<S>::sign(tr) < 0 ? S(-tr) : tr;
  if (cmp_with_tol(abs_tr, scalar_traits<S>::from_int(2), tol) != 0)
    throw NotParabolic("matrix trace is not +-2");
  int s = scalar_traits<S>::sign(m.m12 - m.m21);
  if (scalar_traits<S>::sign(tr) < 0) s = -s;
  if (s == 0) throw NotParabolic("matrix is +-identity");
  return s;
}

// Trace squared of a 1-sided curve from its squared (2-sided) companion:
// (tr gamma)^2 = |tr gamma^2| - 2 for the det = -1 normalization.
template <typename S>
S one_sided_trace_sq(const CurveDescriptor& desc_sq,
                     const EdgeLengths<S>& lambda, const SignVector& eps,
                     double tol = kDefaultTolerance) {
  Holonomy<S> h = curve_trace(desc_sq, lambda, eps, tol);
  S out = h.abs_trace - scalar_traits<S>::from_int(2);
  if (cmp_with_tol(out, scalar_traits<S>::from_int(0), tol) < 0)
    throw NegativeSquare("|tr gamma^2| < 2: not the square of a 1-sided curve");
  return out;
}

// Closed-form traces of the six curves associated to the arcs of the chart.
//
// For |e| = 1 the +- pairing matters.  Holonomy is the pairing that agrees
// with the matrix-product engine on the frozen curve descriptors (difference
// term on pairs of equal-signed triangles); it is the actual trace of the
// curve and is invariant under triangle switches.  GtiSplit is the swapped
// pairing: it is NOT the trace of these curves, but it satisfies the exact
// dichotomy "all six > 2 iff GTI fails" that drives the trace-reduction
// stopping rule.  The engine arbitrates; see the oracle tests.
enum class TraceConvention { Holonomy, GtiSplit };

template <typename S>
Holonomy<S> edge_curve_trace(const Coords4<S>& x, const SignVector& eps, int i,
                             int j, double tol = kDefaultTolerance,
                             TraceConvention conv = TraceConvention::Holonomy) {
  require_positive(x);
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw DomainError("edge pair must be two distinct triangle indices");
  int e = euler_class(eps);
  if (e == 2 || e == -2)
    throw Unsupported("no closed-form traces at |euler| = 2; use the engine");
  int k = -1, l = -1;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j) (k < 0 ? k : l) = m;
  S denom = x[k] * x[l];
  bool same_sign = eps.val[i] == eps.val[j];
  S num;
  if (e == 0) {
    S s = scalar_traits<S>::from_int(0);
    for (int m = 0; m < 4; ++m) s += eps.val[m] > 0 ? x[m] : S(-x[m]);
    if (scalar_traits<S>::sign(s) == 0)
      throw DegenerateCusp("sum eps*X vanishes: chart is degenerate");
    num = same_sign ? S(s * s - denom - denom) : S(s * s + denom + denom);
  } else {
    // |e| = 1
    bool use_diff =
        (conv == TraceConvention::Holonomy) ? same_sign : !same_sign;
    S mix = use_diff ? S(x[i] - x[j]) : S(x[i] + x[j]);
    num = x[k] * x[k] + x[l] * x[l] - mix * mix;
  }
  if (scalar_traits<S>::sign(num) < 0) num = -num;
  S abs_trace = num / denom;
  Holonomy<S> out{abs_trace, classify_kind(abs_trace, tol), std::nullopt};
  return out;
}

template <typename S>
Holonomy<S> edge_curve_trace(const Coords4<S>& x, const SignVector& eps,
                             Edge arc, double tol = kDefaultTolerance,
                             TraceConvention conv = TraceConvention::Holonomy) {
  auto d = dual_pair(arc);
  return edge_curve_trace(x, eps, idx(d[0]), idx(d[1]), tol, conv);
}

// Domination comparison: |tr| under eps against |tr| under the all-positive
// signs (a Fuchsian representative with the same lambda-lengths), plus
// whether the curve meets a negative triangle.
template <typename S>
std::tuple<S, S, bool> dominate_compare(const EdgeLengths<S>& lambda,
                                        const SignVector& eps,
                                        const CurveDescriptor& desc,
                                        double tol = kDefaultTolerance) {
  Holonomy<S> under = curve_trace(desc, lambda, eps, tol);
  Holonomy<S> over = curve_trace(desc, lambda, eps_all_plus(), tol);
  bool meets_negative = false;
  for (const CurveStep& s : desc.steps)
    if (eps(s.tri) < 0) meets_negative = true;
  return {under.abs_trace, over.abs_trace, meets_negative};
}

}  // namespace charvar
