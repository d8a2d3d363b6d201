#include <doctest.h>

#include <random>

#include "charvar/coords.hpp"
#include "charvar/traces.hpp"

using namespace charvar;

namespace {

EdgeLengths<Rat> unit_lambda() {
  EdgeLengths<Rat> l;
  l.fill(rat(1));
  return l;
}

EdgeLengths<Rat> random_lambda(std::mt19937_64& rng) {
  EdgeLengths<Rat> l;
  for (auto& v : l) v = rat(1 + (long)(rng() % 20), 1 + (long)(rng() % 9));
  return l;
}

}  // namespace

TEST_CASE("turn matrices read off the crossing data") {
  auto l = unit_lambda();
  SignVector plus = eps_all_plus();
  auto m = turn_matrix(CurveStep{Tri::t1, Edge::b, Edge::d, Turn::Left}, l,
                       plus);
  CHECK(m.m11 == rat(1));
  CHECK(m.m12 == rat(1));
  CHECK(m.m21 == rat(0));
  CHECK(m.m22 == rat(1));

  SignVector minus1 = eps_one(Tri::t1);
  auto r = turn_matrix(CurveStep{Tri::t1, Edge::b, Edge::d, Turn::Right}, l,
                       minus1);
  CHECK(r.m11 == rat(1));
  CHECK(r.m12 == rat(0));
  CHECK(r.m21 == rat(-1));
  CHECK(r.m22 == rat(1));

  // left turn with lambda(enter)=2, lambda(exit)=3, lambda(third)=5
  EdgeLengths<Rat> lam = unit_lambda();
  lam[idx(Edge::b)] = rat(2);
  lam[idx(Edge::d)] = rat(3);
  lam[idx(Edge::f)] = rat(5);
  auto t = turn_matrix(CurveStep{Tri::t1, Edge::b, Edge::d, Turn::Left}, lam,
                       plus);
  CHECK(t.m11 == rat(2));
  CHECK(t.m12 == rat(5));
  CHECK(t.m22 == rat(3));

  CHECK_THROWS_AS(
      turn_matrix(CurveStep{Tri::t1, Edge::a, Edge::d, Turn::Left}, l, plus),
      BadStep);
}

TEST_CASE("peripheral curves are parabolic with the cusp-entry signs") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 100; ++n) {
    auto lam = random_lambda(rng);
    auto x = triangle_coords(lam);
    for (int e : {0, 1, -1, 2, -2}) {
      for (const auto& eps : sign_vectors_with_euler(e)) {
        auto entries = cusp_entries(x, eps);
        for (int row = 0; row < 3; ++row) {
          auto h = curve_trace(peripheral_curve(cusp_entry_vertex(row)), lam,
                               eps);
          CHECK(h.abs_trace == rat(2));
          CHECK(h.kind == IsomKind::Parabolic);
          if (sgn(entries[row]) != 0) {
            REQUIRE(h.parabolic_sign.has_value());
            CHECK(*h.parabolic_sign == sgn(entries[row]));
          }
        }
      }
    }
  }
}

TEST_CASE("engine reproduces the worked arc-curve trace") {
  // X = (1,1,1,2) via the float section, eps_{1,2}: arc d trace 3/2
  Coords4<double> x{1, 1, 1, 2};
  auto lam = section(x);
  auto h = curve_trace(edge_curve(Edge::d), lam, eps_pair(Tri::t1, Tri::t2));
  CHECK(h.abs_trace == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(h.kind == IsomKind::Elliptic);
}

TEST_CASE("closed-form arc traces at the worked charts") {
  Coords4<Rat> x{rat(1), rat(1), rat(1), rat(2)};
  SignVector eps = eps_pair(Tri::t1, Tri::t2);
  auto h12 = edge_curve_trace(x, eps, 0, 1);
  CHECK(h12.abs_trace == rat(3, 2));
  CHECK(h12.kind == IsomKind::Elliptic);
  auto h13 = edge_curve_trace(x, eps, 0, 2);
  CHECK(h13.abs_trace == rat(5, 2));
  CHECK(h13.kind == IsomKind::Hyperbolic);

  Coords4<Rat> y{rat(4), rat(1), rat(1), rat(1)};
  SignVector eps2 = eps_one(Tri::t2);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(edge_curve_trace(y, eps2, i, j).kind == IsomKind::Hyperbolic);

  CHECK_THROWS_AS(edge_curve_trace(x, eps_all_plus(), 0, 1), Unsupported);
  Coords4<Rat> deg{rat(1), rat(1), rat(1), rat(1)};
  CHECK_THROWS_AS(edge_curve_trace(deg, eps, 0, 1), DegenerateCusp);
}

TEST_CASE("engine agrees with the closed forms, exactly") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 60; ++n) {
    auto lam = random_lambda(rng);
    auto x = triangle_coords(lam);
    for (int e : {0, 1, -1}) {
      for (const auto& eps : sign_vectors_with_euler(e)) {
        for (Edge arc : all_edges) {
          Rat closed;
          try {
            closed = edge_curve_trace(x, eps, arc).abs_trace;
          } catch (const DegenerateCusp&) {
            continue;
          }
          CHECK(curve_trace(edge_curve(arc), lam, eps).abs_trace == closed);
        }
      }
    }
  }
}

TEST_CASE("closed-form traces are scale invariant") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 100; ++n) {
    auto lam = random_lambda(rng);
    auto x = triangle_coords(lam);
    Rat r = rat(1 + (long)(rng() % 30), 1 + (long)(rng() % 11));
    Coords4<Rat> scaled{x[0] * r, x[1] * r, x[2] * r, x[3] * r};
    SignVector eps = eps_one(Tri::t3);
    for (Edge arc : all_edges)
      CHECK(edge_curve_trace(x, eps, arc).abs_trace ==
            edge_curve_trace(scaled, eps, arc).abs_trace);
  }
}

TEST_CASE("parabolic sign extraction") {
  Mat2<Rat> upper{rat(1), rat(3), rat(0), rat(1)};
  CHECK(parabolic_sign(upper) == 1);
  Mat2<Rat> lower{rat(1), rat(0), rat(5), rat(1)};
  CHECK(parabolic_sign(lower) == -1);
  Mat2<Rat> neg{rat(-1), rat(-7), rat(0), rat(-1)};
  CHECK(parabolic_sign(neg) == 1);  // normalize -I lift to trace +2
  Mat2<Rat> hyp{rat(3), rat(0), rat(0), rat(1)};
  CHECK_THROWS_AS(parabolic_sign(hyp), NotParabolic);
  Mat2<Rat> ident{rat(1), rat(0), rat(0), rat(1)};
  CHECK_THROWS_AS(parabolic_sign(ident), NotParabolic);
}

TEST_CASE("one-sided squares: trace squared is nonnegative") {
  // arithmetic contract
  std::mt19937_64 rng(41);
  for (int n = 0; n < 100; ++n) {
    auto lam = random_lambda(rng);
    for (int e : {0, 1, -1, 2, -2}) {
      for (const auto& eps : sign_vectors_with_euler(e)) {
        for (Tri t : all_tris) {
          Rat sq = one_sided_trace_sq(one_sided_square(t), lam, eps);
          CHECK(sgn(sq) >= 0);
        }
      }
    }
  }
  // |tr gamma^2| = 18 gives |tr gamma| = 4
  CHECK(rat(18) - 2 == rat(16));
}

TEST_CASE("squares of one-sided curves are never 2-sided inputs elsewhere") {
  CurveDescriptor not_two_sided = edge_curve(Edge::a);
  not_two_sided.two_sided = false;
  auto lam = unit_lambda();
  CHECK_THROWS_AS(curve_trace(not_two_sided, lam, eps_all_plus()), BadStep);
}

TEST_CASE("domination against the all-positive chart") {
  auto lam = unit_lambda();
  // eps all positive: equal traces, no negative triangle met
  auto [u0, o0, f0] = dominate_compare(lam, eps_all_plus(), edge_curve(Edge::d));
  CHECK(u0 == o0);
  CHECK(!f0);

  Coords4<double> x{1, 1, 1, 2};
  auto lamf = section(x);
  auto [u1, o1, f1] =
      dominate_compare(lamf, eps_pair(Tri::t1, Tri::t2), edge_curve(Edge::d));
  CHECK(u1 == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(o1 == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(f1);

  std::mt19937_64 rng(43);
  for (int n = 0; n < 100; ++n) {
    auto l = random_lambda(rng);
    auto choices = sign_vectors_with_euler((int)(rng() % 5) - 2);
    const SignVector& eps = choices[rng() % choices.size()];
    const CurveDescriptor& desc = (n % 2) ? edge_curve(all_edges[rng() % 6])
                                          : one_sided_square(all_tris[rng() % 4]);
    auto [under, over, meets] = dominate_compare(l, eps, desc);
    CHECK(cmp(under, over) <= 0);
    if (meets) CHECK(cmp(under, over) < 0);
  }
}

TEST_CASE("trace identity consistency with the one-sided squares") {
  // T_pair = |x_i x_j +- 2| forces (x_i x_j)^2 = sq_i sq_j; the arc curves
  // and the squares were frozen against this system.
  std::mt19937_64 rng(47);
  for (int n = 0; n < 40; ++n) {
    auto lam = random_lambda(rng);
    for (int e : {1, -1, 0}) {
      for (const auto& eps : sign_vectors_with_euler(e)) {
        std::array<Rat, 4> sq;
        for (Tri t : all_tris)
          sq[idx(t)] =
              curve_trace(one_sided_square(t), lam, eps).abs_trace - 2;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) {
            Rat t_pair = curve_trace(edge_curve(dual_edge(
                                         static_cast<Tri>(i),
                                         static_cast<Tri>(j))),
                                     lam, eps)
                             .abs_trace;
            Rat lo = (t_pair - 2) * (t_pair - 2);
            Rat hi = (t_pair + 2) * (t_pair + 2);
            Rat target = sq[i] * sq[j];
            CHECK((target == lo || target == hi));
          }
      }
    }
  }
}
