#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/switches.hpp"
#include "charvar/traces.hpp"

namespace charvar {

enum class ReductionOutcome {
  FoundNonAdmissibleEdge,
  FoundGtiWitness,
  FoundSqGtiWitness,
  StepLimit,
  StepLimitTie,
};

std::string outcome_name(ReductionOutcome o);

struct ReductionStep {
  TreeAddress address;
  Coords4<Rat> coords;
  SignVector signs;
  int switched = -1;  // triangle index switched to reach the NEXT step
};

struct ReductionWitness {
  int pair_i = 0, pair_j = 0;     // dual pair of the witness curve's arc
  Holonomy<Rat> holonomy;         // its trace, |tr| <= 2 exactly
  TreeAddress address;            // chart where the curve is an arc curve
};

struct ReductionLog {
  std::vector<ReductionStep> steps;
  ReductionOutcome outcome = ReductionOutcome::StepLimit;
  std::optional<ReductionWitness> witness;
  // Set for FoundNonAdmissibleEdge: the degenerate arc and the vanishing
  // quantity, e.g. "edge c: X_1 + X_2 - X_3 = 0 at [S4]".
  std::optional<std::string> inadmissible_edge;
};

struct DiagnosticsRow {
  int step = 0;
  // Euler class +-1: sorted-normalized projection (two smallest, third, max)
  // with the subcase region; blank for e = 0.
  double a = 0, b = 0, c = 0;
  char region = ' ';
  // Euler class 0: the contraction quantity u (exact) and the two sqrt-GTI
  // defects; blank for |e| = 1.
  std::optional<Rat> u;
  double h = 0, k = 0;
};

struct ReductionDiagnostics {
  bool euler_zero = false;
  std::vector<DiagnosticsRow> rows;
};

// Greedy switch-along-the-maximum descent.  Stops at a non-admissible
// switched chart (zero Laurent quantity), or when the generalized triangle
// inequalities (|e| = 1) / their square-root form (e = 0) certify a
// non-hyperbolic arc curve nearby; the returned witness trace is exact.
std::pair<ReductionLog, ReductionDiagnostics> trace_reduce(
    const Coords4<Rat>& x, const SignVector& eps, int max_steps = 1000);

// Rejection sampler for a census component.  Deterministic for a fixed
// seed.  Throws EmptyComponent for (euler, signs) pairs that no
// representation realizes.
std::pair<Coords4<Rat>, SignVector> sample_component(int euler,
                                                     const std::array<int, 3>& signs,
                                                     std::mt19937_64& rng);

// Uniform-on-the-simplex coordinates, rationalized at denominator 2^16.
Coords4<Rat> sample_simplex(std::mt19937_64& rng);

struct WalkFinding {
  TreeAddress address;
  std::string quantity;  // the vanishing admissibility quantity
};

struct WalkReport {
  long charts_visited = 0;
  std::vector<WalkFinding> zeros;
};

// Explores all reduced switch words to the given depth and reports every
// vanishing admissibility quantity (non-admissible balanced triangulation).
WalkReport admissibility_walk(const Coords4<Rat>& x, const SignVector& eps,
                              int depth);

struct ScanWitness {
  TreeAddress address;
  int pair_i = 0, pair_j = 0;
  Holonomy<Rat> holonomy;
};

struct ScanReport {
  long charts_visited = 0;
  Rat min_trace;
  TreeAddress min_address;
  std::vector<ScanWitness> non_hyperbolic;  // traces <= 2
};

// Enumerates all balanced triangulations to the given tree depth and
// evaluates the six arc-curve traces at each.  Euler class +-1 only.
ScanReport hyperbolicity_scan(const Coords4<Rat>& x, const SignVector& eps,
                              int depth);

struct PairStatus {
  int pair_i = 0, pair_j = 0;
  bool same_sign = false;
  Holonomy<Rat> holonomy;
};

struct SeparationReport {
  std::array<PairStatus, 6> pairs;
  bool opposite_all_hyperbolic = false;
  int non_hyperbolic_same_sign = 0;
};

// Structural dichotomy at an e = 0 chart: the four opposite-sign pair curves
// are hyperbolic; the two same-sign pairs follow the sqrt-GTI test.
SeparationReport e0_separation_check(const Coords4<Rat>& x,
                                     const SignVector& eps);

}  // namespace charvar
