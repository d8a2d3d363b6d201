#pragma once

#include <array>
#include <utility>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/scalar.hpp"

namespace charvar {

// Quadrilateral of a diagonal flip.  The cyclic boundary is (e1,e2,e3,e4)
// with the diagonal joining the (e4,e1) and (e2,e3) corners, so that
// t1 = (diag,e1,e2) and t2 = (diag,e3,e4) are the two triangles and
// lambda(e1)lambda(e3), lambda(e2)lambda(e4) are the opposite-side products.
template <typename S>
struct FlipConfig {
  S diag;
  std::array<S, 4> sides;
  int sign1 = 1;  // sign of t1
  int sign2 = 1;  // sign of t2
};

// Replaces the diagonal.  The result is the flipped quadrilateral in the
// same cyclic frame: new t1 = (diag', e2, e3), new t2 = (diag', e4, e1).
//
// Equal signs give the Ptolemy rule and preserve signs.  Unequal signs give
// the difference rule; which new triangle inherits which sign follows the
// ideal-point picture: developing the quadrilateral with the fourth vertex
// on the near side of the diagonal, the smaller opposite product pushes the
// old t1 sign onto the triangle carrying e1.
template <typename S>
FlipConfig<S> diagonal_flip(const FlipConfig<S>& cfg) {
  if (scalar_traits<S>::sign(cfg.diag) <= 0)
    throw DomainError("flip needs positive lambda-lengths");
  for (const S& v : cfg.sides)
    if (scalar_traits<S>::sign(v) <= 0)
      throw DomainError("flip needs positive lambda-lengths");
  S p1 = cfg.sides[0] * cfg.sides[2];
  S p2 = cfg.sides[1] * cfg.sides[3];
  FlipConfig<S> out;
  out.sides = {cfg.sides[1], cfg.sides[2], cfg.sides[3], cfg.sides[0]};
  if (cfg.sign1 == cfg.sign2) {
    out.diag = (p1 + p2) / cfg.diag;
    out.sign1 = cfg.sign1;
    out.sign2 = cfg.sign1;
    return out;
  }
  int c = cmp_with_tol(p1, p2, 0.0);
  if (c == 0)
    throw Inadmissible("opposite-side products coincide: flipped arc is not admissible");
  if (c < 0) {
    out.diag = (p2 - p1) / cfg.diag;
    out.sign1 = cfg.sign2;
    out.sign2 = cfg.sign1;
  } else {
    out.diag = (p1 - p2) / cfg.diag;
    out.sign1 = cfg.sign1;
    out.sign2 = cfg.sign2;
  }
  return out;
}

template <typename S>
struct SwitchResult {
  Coords4<S> coords;
  SignVector signs;
  bool admissible = true;
};

// Lemma-level switch for Euler class 0 along triangle l.
template <typename S>
SwitchResult<S> triangle_switch_e0(const Coords4<S>& x, const SignVector& eps,
                                   Tri l);

// Lemma-level switch for Euler class +-1 along triangle l.
template <typename S>
SwitchResult<S> triangle_switch_e1(const Coords4<S>& x, const SignVector& eps,
                                   Tri l);

// Dispatches on the Euler class (0 or +-1).
template <typename S>
SwitchResult<S> triangle_switch(const Coords4<S>& x, const SignVector& eps,
                                Tri l);

// The switch as the four-flip composite on lambda-lengths, passing through
// the two non-balanced intermediate triangulations.  Throws Inadmissible if
// every flip order degenerates (a strictly stronger condition than the
// lemma-level admissibility on a measure-zero set).
template <typename S>
std::pair<EdgeLengths<S>, SignVector> switch_via_flips(
    const EdgeLengths<S>& lambda, const SignVector& eps, Tri l);

// Exact projective equality of positive coordinate quadruples.
template <typename S>
bool proj_equal(const Coords4<S>& a, const Coords4<S>& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (cmp_with_tol(S(a[i] * b[j]), S(a[j] * b[i]), 1e-9) != 0) return false;
  return true;
}

// ---- implementation ----

template <typename S>
SwitchResult<S> triangle_switch_e0(const Coords4<S>& x, const SignVector& eps,
                                   Tri l) {
  require_positive(x);
  if (euler_class(eps) != 0)
    throw Unsupported("e0 switch needs Euler class 0");
  int li = idx(l);
  int k = -1;
  std::array<int, 2> ij{};
  int n = 0;
  for (int m = 0; m < 4; ++m) {
    if (m == li) continue;
    if (eps.val[m] == eps.val[li])
      k = m;
    else
      ij[n++] = m;
  }
  S s = x[ij[0]] + x[ij[1]] - x[k];
  int sign_s = scalar_traits<S>::sign(s);
  if (sign_s == 0)
    throw Inadmissible("X_" + std::to_string(k + 1) + " = X_" +
                       std::to_string(ij[0] + 1) + " + X_" +
                       std::to_string(ij[1] + 1) +
                       ": switched triangulation is not admissible");
  S abs_s = sign_s < 0 ? S(-s) : s;
  SwitchResult<S> out;
  for (int m = 0; m < 4; ++m)
    out.coords[m] = m == li ? S(abs_s * abs_s * abs_s / (x[li] * x[li]))
                            : S(abs_s * x[m] / x[li]);
  out.signs = sign_s < 0 ? eps : negate(eps);
  return out;
}

template <typename S>
SwitchResult<S> triangle_switch_e1(const Coords4<S>& x, const SignVector& eps,
                                   Tri l) {
  require_positive(x);
  int e = euler_class(eps);
  if (e != 1 && e != -1)
    throw Unsupported("e1 switch needs Euler class +-1");
  if (e == -1) {
    SwitchResult<S> mirrored = triangle_switch_e1(x, negate(eps), l);
    mirrored.signs = negate(mirrored.signs);
    return mirrored;
  }
  int li = idx(l);
  std::array<int, 3> rest{};
  int n = 0;
  for (int m = 0; m < 4; ++m)
    if (m != li) rest[n++] = m;
  // negative triangle index
  int neg = -1;
  for (int m = 0; m < 4; ++m)
    if (eps.val[m] < 0) neg = m;

  std::array<S, 3> q;
  std::array<S, 3> abs_q;
  for (int a = 0; a < 3; ++a) {
    int i = rest[a], j = rest[(a + 1) % 3], k = rest[(a + 2) % 3];
    S val = scalar_traits<S>::from_int(0);
    val -= eps.val[i] > 0 ? x[i] : S(-x[i]);
    val += eps.val[j] > 0 ? x[j] : S(-x[j]);
    val += eps.val[k] > 0 ? x[k] : S(-x[k]);
    int sg = scalar_traits<S>::sign(val);
    if (sg == 0)
      throw Inadmissible("vanishing switch quantity at X_" +
                         std::to_string(i + 1) +
                         ": switched triangulation is not admissible");
    q[a] = val;
    abs_q[a] = sg < 0 ? S(-val) : val;
  }
  SwitchResult<S> out;
  for (int a = 0; a < 3; ++a) out.coords[rest[a]] = abs_q[a] * x[rest[a]] / x[li];
  out.coords[li] = abs_q[0] * abs_q[1] * abs_q[2] / (x[li] * x[li]);

  // Sign update.  Within the complement triple of l there is at most one
  // coordinate exceeding the sum of the other two; the new negative triangle
  // follows it.  Validated against the flip composite.
  int dom3 = -1;
  for (int a = 0; a < 3; ++a) {
    int i = rest[a], j = rest[(a + 1) % 3], k = rest[(a + 2) % 3];
    if (scalar_traits<S>::sign(S(x[i] - x[j] - x[k])) > 0) dom3 = i;
  }
  int new_neg;
  if (neg == li) {
    new_neg = dom3 >= 0 ? dom3 : li;
  } else {
    if (dom3 < 0 || dom3 == neg)
      new_neg = li;
    else {
      new_neg = -1;
      for (int m = 0; m < 4; ++m)
        if (m != li && m != neg && m != dom3) new_neg = m;
    }
  }
  out.signs = eps_one(static_cast<Tri>(new_neg));
  return out;
}

template <typename S>
SwitchResult<S> triangle_switch(const Coords4<S>& x, const SignVector& eps,
                                Tri l) {
  int e = euler_class(eps);
  if (e == 0) return triangle_switch_e0(x, eps, l);
  if (e == 1 || e == -1) return triangle_switch_e1(x, eps, l);
  throw Unsupported("no lemma-level switch at |euler| = 2; use the flips");
}

namespace detail {

// One flip order of the t4-switch on the standard labels.  `rot` cycles the
// roles (a,b,c)->(b,c,a) and (d,e,f)->(e,f,d), i.e. which of t4's edges is
// flipped first.
template <typename S>
std::pair<EdgeLengths<S>, SignVector> t4_switch_order(
    const EdgeLengths<S>& lam, const SignVector& eps, int rot) {
  // role indices under rotation: edges of t4 and their opposites
  auto rotate3 = [rot](int base0, int base1, int base2, int k) {
    int arr[3] = {base0, base1, base2};
    return arr[(k + rot) % 3];
  };
  const int A_ = rotate3(idx(Edge::a), idx(Edge::b), idx(Edge::c), 0);
  const int B_ = rotate3(idx(Edge::a), idx(Edge::b), idx(Edge::c), 1);
  const int C_ = rotate3(idx(Edge::a), idx(Edge::b), idx(Edge::c), 2);
  const int D_ = rotate3(idx(Edge::d), idx(Edge::e), idx(Edge::f), 0);
  const int E_ = rotate3(idx(Edge::d), idx(Edge::e), idx(Edge::f), 1);
  const int F_ = rotate3(idx(Edge::d), idx(Edge::e), idx(Edge::f), 2);
  // triangles in rotated roles: t1 contains {b,d,f} roles etc.
  const int T1_ = rotate3(idx(Tri::t1), idx(Tri::t2), idx(Tri::t3), 0);
  const int T2_ = rotate3(idx(Tri::t1), idx(Tri::t2), idx(Tri::t3), 1);
  const int T3_ = rotate3(idx(Tri::t1), idx(Tri::t2), idx(Tri::t3), 2);

  // flip 1: diagonal a between t4 = (a,c,b) and t3 = (a,e,f)
  FlipConfig<S> f1{lam[A_],
                   {lam[C_], lam[B_], lam[E_], lam[F_]},
                   eps.val[idx(Tri::t4)],
                   eps.val[T3_]};
  auto r1 = diagonal_flip(f1);
  S a_star = r1.diag;
  int sign_u1 = r1.sign1;  // u1 = {a*, b, e}
  int sign_u2 = r1.sign2;  // u2 = {a*, c, f}

  // flip 2: diagonal b between t1 = (b,d,f) and u1 = (b,a*,e)
  FlipConfig<S> f2{lam[B_],
                   {lam[D_], lam[F_], a_star, lam[E_]},
                   eps.val[T1_],
                   sign_u1};
  auto r2 = diagonal_flip(f2);
  S c_new = r2.diag;
  int sign_w1 = r2.sign1;  // w1 = {c', f, a*}
  int sign_w2 = r2.sign2;  // w2 = {c', d, e} = new t2

  // flip 3: diagonal c between t2 = (c,d,e) and u2 = (c,a*,f)
  FlipConfig<S> f3{lam[C_],
                   {lam[D_], lam[E_], a_star, lam[F_]},
                   eps.val[T2_],
                   sign_u2};
  auto r3 = diagonal_flip(f3);
  S b_new = r3.diag;
  int sign_x1 = r3.sign1;  // x1 = {b', e, a*}
  int sign_x2 = r3.sign2;  // x2 = {b', d, f} = new t1

  // flip 4: diagonal a* between w1 = (a*,f,c') and x1 = (a*,b',e)
  FlipConfig<S> f4{a_star, {lam[F_], c_new, b_new, lam[E_]}, sign_w1, sign_x1};
  auto r4 = diagonal_flip(f4);
  S a_new = r4.diag;
  int sign_t4 = r4.sign1;  // {a', b', c'}
  int sign_t3 = r4.sign2;  // {a', e, f}

  EdgeLengths<S> out = lam;
  out[A_] = a_new;
  out[B_] = b_new;
  out[C_] = c_new;
  SignVector signs;
  signs.val[T1_] = sign_x2;
  signs.val[T2_] = sign_w2;
  signs.val[T3_] = sign_t3;
  signs.val[idx(Tri::t4)] = sign_t4;
  return {out, signs};
}

}  // namespace detail

template <typename S>
std::pair<EdgeLengths<S>, SignVector> switch_via_flips(
    const EdgeLengths<S>& lambda, const SignVector& eps, Tri l) {
  require_positive(lambda);
  TriPermutation to4 = tri_swap(l, Tri::t4);
  EdgeLengths<S> lam;
  SignVector sv;
  for (Edge e : all_edges) lam[idx(to4(e))] = lambda[idx(e)];
  for (Tri t : all_tris) sv.val[idx(to4(t))] = eps(t);
  // The three flip orders land on the same final chart; fall through the
  // degenerate intermediate triangulations.
  for (int rot = 0; rot < 3; ++rot) {
    try {
      auto [lam_out, sv_out] = detail::t4_switch_order(lam, sv, rot);
      EdgeLengths<S> back;
      SignVector back_sv;
      for (Edge e : all_edges) back[idx(e)] = lam_out[idx(to4(e))];
      for (Tri t : all_tris) back_sv.val[idx(t)] = sv_out.val[idx(to4(t))];
      return {back, back_sv};
    } catch (const Inadmissible&) {
      if (rot == 2) throw;
    }
  }
  throw Inadmissible("unreachable");
}

}  // namespace charvar
