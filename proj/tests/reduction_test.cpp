#include <doctest.h>

#include <random>

#include "charvar/reduction.hpp"

using namespace charvar;

TEST_CASE("reduction stops immediately inside the GTI region") {
  Coords4<Rat> x{rat(1), rat(1), rat(1), rat(2)};
  auto [log, diag] = trace_reduce(x, eps_one(Tri::t4), 1000);
  CHECK(log.outcome == ReductionOutcome::FoundGtiWitness);
  CHECK(log.steps.size() == 1);
  REQUIRE(log.witness.has_value());
  CHECK(cmp(log.witness->holonomy.abs_trace, Rat(2)) <= 0);
}

TEST_CASE("reduction takes one switch from a dominant chart") {
  Coords4<Rat> x{rat(1), rat(1), rat(1), rat(4)};
  auto [log, diag] = trace_reduce(x, eps_one(Tri::t4), 1000);
  CHECK(log.outcome == ReductionOutcome::FoundGtiWitness);
  CHECK(log.steps.size() == 2);
  CHECK(log.steps.front().switched == 3);
  CHECK(proj_equal(log.steps.back().coords,
                   Coords4<Rat>{rat(1), rat(1), rat(1), rat(1, 4)}));
  REQUIRE(log.witness.has_value());
  CHECK(cmp(log.witness->holonomy.abs_trace, Rat(2)) <= 0);
}

TEST_CASE("e0 reduction reports the elliptic pair at once") {
  Coords4<Rat> x{rat(1), rat(1), rat(1), rat(2)};
  auto [log, diag] = trace_reduce(x, eps_pair(Tri::t1, Tri::t2), 1000);
  CHECK(log.outcome == ReductionOutcome::FoundSqGtiWitness);
  CHECK(log.steps.size() == 1);
  REQUIRE(log.witness.has_value());
  CHECK(log.witness->pair_i == 0);
  CHECK(log.witness->pair_j == 1);
  CHECK(log.witness->holonomy.abs_trace == rat(3, 2));
}

TEST_CASE("ties are surfaced, not invented") {
  Coords4<Rat> x{rat(2), rat(2), rat(2), rat(2)};
  // sqGTI holds at the symmetric chart, so force a tie with a non-stopping
  // eps pattern: dominant pair, all four coordinates equal never continues;
  // use an e=+1 chart violating GTI with a tied maximum instead.
  Coords4<Rat> tied{rat(3), rat(3), rat(1), rat(8)};
  // max unique here; construct a genuine tie:
  Coords4<Rat> tie2{rat(8), rat(8), rat(1), rat(1)};
  auto [log, diag] = trace_reduce(tie2, eps_one(Tri::t1), 1000);
  CHECK(log.outcome == ReductionOutcome::StepLimitTie);
  (void)x;
  (void)tied;
}

TEST_CASE("inadmissible switches stop with the degenerate arc") {
  // e=0 along t4 with X3 = X1 + X2 vanishes
  Coords4<Rat> x{rat(1), rat(1), rat(2), rat(5)};
  auto [log, diag] = trace_reduce(x, eps_pair(Tri::t1, Tri::t2), 1000);
  // the chart fails sqGTI for both same-sign pairs, so the algorithm wants
  // the switch along t4 and hits the vanishing quantity
  if (log.outcome == ReductionOutcome::FoundNonAdmissibleEdge) {
    REQUIRE(log.inadmissible_edge.has_value());
    CHECK(log.inadmissible_edge->find("= 0") != std::string::npos);
  } else {
    // if the chart actually satisfies a stop condition the witness is valid
    REQUIRE(log.witness.has_value());
    CHECK(cmp(log.witness->holonomy.abs_trace, Rat(2)) <= 0);
  }
}

TEST_CASE("sampler respects the census and refuses empty components") {
  std::mt19937_64 rng(71);
  auto [x, eps] = sample_component(0, {1, -1, -1}, rng);
  auto label = classify(x, eps);
  CHECK(label.euler == 0);
  CHECK(label.signs == std::array<int, 3>{1, -1, -1});

  auto [y, eps2] = sample_component(1, {1, 1, 1}, rng);
  auto label2 = classify(y, eps2);
  CHECK(label2.euler == 1);
  CHECK(label2.signs == std::array<int, 3>{1, 1, 1});

  CHECK_THROWS_AS(sample_component(0, {1, 1, 1}, rng), EmptyComponent);
  CHECK_THROWS_AS(sample_component(2, {1, 1, 1}, rng), EmptyComponent);
}

TEST_CASE("sampling is deterministic in the seed") {
  std::mt19937_64 a(12345), b(12345);
  for (int n = 0; n < 20; ++n) {
    auto [xa, ea] = sample_component(1, {1, 1, 1}, a);
    auto [xb, eb] = sample_component(1, {1, 1, 1}, b);
    CHECK(xa == xb);
    CHECK(ea == eb);
  }
}

TEST_CASE("admissibility walk finds crafted zeros and nothing else") {
  std::mt19937_64 rng(73);
  auto [x, eps] = sample_component(1, {1, 1, 1}, rng);
  auto clean = admissibility_walk(x, eps, 6);
  CHECK(clean.zeros.empty());
  CHECK(clean.charts_visited > 100);

  // crafted boundary: -X1 + X2 + X3 = 0 vanishes along S4
  Coords4<Rat> crafted{rat(5), rat(2), rat(3), rat(7)};
  auto report = admissibility_walk(crafted, eps_one(Tri::t4), 1);
  REQUIRE(!report.zeros.empty());
  bool found_s4 = false;
  for (const auto& z : report.zeros)
    if (z.address.word == std::vector<std::uint8_t>{3}) found_s4 = true;
  CHECK(found_s4);

  CHECK(admissibility_walk(crafted, eps_one(Tri::t4), 0).zeros.empty());
  CHECK(admissibility_walk(crafted, eps_one(Tri::t4), 0).charts_visited == 0);
}

TEST_CASE("hyperbolicity scan: all curves hyperbolic in the two-plus charts") {
  std::mt19937_64 rng(79);
  auto [x, eps] = sample_component(1, {-1, 1, 1}, rng);
  auto report = hyperbolicity_scan(x, eps, 4);
  CHECK(report.charts_visited == 1 + 4 + 4 * 3 + 4 * 9 + 4 * 27);
  CHECK(report.non_hyperbolic.empty());
  CHECK(cmp(report.min_trace, Rat(2)) > 0);

  // s+ charts surface a witness quickly
  Coords4<Rat> plus{rat(1), rat(1), rat(1), rat(4)};
  auto hit = hyperbolicity_scan(plus, eps_one(Tri::t4), 1);
  CHECK(!hit.non_hyperbolic.empty());

  CHECK_THROWS_AS(
      hyperbolicity_scan(plus, eps_pair(Tri::t1, Tri::t2), 2), Unsupported);
}

TEST_CASE("e0 separation dichotomy at the worked chart") {
  Coords4<Rat> x{rat(1), rat(1), rat(1), rat(2)};
  auto report = e0_separation_check(x, eps_pair(Tri::t1, Tri::t2));
  CHECK(report.opposite_all_hyperbolic);
  int elliptic = 0;
  for (const auto& p : report.pairs) {
    if (!p.same_sign) CHECK(p.holonomy.abs_trace == rat(5, 2));
    if (p.same_sign && p.holonomy.kind != IsomKind::Hyperbolic) ++elliptic;
  }
  CHECK(elliptic == report.non_hyperbolic_same_sign);
  CHECK(report.non_hyperbolic_same_sign >= 1);

  Coords4<Rat> degenerate{rat(1), rat(1), rat(1), rat(1)};
  CHECK_THROWS_AS(
      e0_separation_check(degenerate, eps_pair(Tri::t1, Tri::t2)),
      DegenerateCusp);
  CHECK_THROWS_AS(e0_separation_check(x, eps_one(Tri::t1)), Unsupported);
}

TEST_CASE("labels ride along reduction trajectories") {
  std::mt19937_64 rng(83);
  for (int n = 0; n < 50; ++n) {
    auto [x, eps] = sample_component(0, {-1, 1, -1}, rng);
    auto [log, diag] = trace_reduce(x, eps, 1000);
    auto first = classify(log.steps.front().coords, log.steps.front().signs);
    for (const auto& step : log.steps) {
      auto label = classify(step.coords, step.signs);
      CHECK(label.euler == first.euler);
      CHECK(label.signs == first.signs);
    }
    // u_n decreases strictly while the run continues
    for (std::size_t r = 0; r + 1 < diag.rows.size(); ++r) {
      REQUIRE(diag.rows[r].u.has_value());
      CHECK(cmp(*diag.rows[r + 1].u, *diag.rows[r].u) < 0);
    }
  }
}
