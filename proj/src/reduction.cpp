#include "charvar/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace charvar {

namespace {

// Scale positive rational coordinates to a coprime integer quadruple; keeps
// the heights of the switch orbit from accumulating spurious factors.
void normalize_coords(Coords4<Rat>& x) {
  mpz_class den_lcm = 1;
  for (const auto& v : x) {
    mpz_class d = v.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::array<mpz_class, 4> num;
  for (int i = 0; i < 4; ++i)
    num[i] = x[i].get_num() * (den_lcm / x[i].get_den());
  mpz_class g = num[0];
  for (int i = 1; i < 4; ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
  for (int i = 0; i < 4; ++i) {
    x[i] = Rat(num[i] / g);
  }
}

// Quantities whose vanishing makes the switch along l non-admissible, each
// tagged with the new arc it degenerates.
struct SwitchQuantity {
  Rat value;
  Edge new_edge;
  std::string text;
};

std::vector<SwitchQuantity> switch_quantities(const Coords4<Rat>& x,
                                              const SignVector& eps, Tri l) {
  std::vector<SwitchQuantity> out;
  int e = euler_class(eps);
  int li = idx(l);
  if (e == 0) {
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
    Rat s = x[ij[0]] + x[ij[1]] - x[k];
    out.push_back({s, dual_edge(static_cast<Tri>(ij[0]), l),
                   "X_" + std::to_string(ij[0] + 1) + " + X_" +
                       std::to_string(ij[1] + 1) + " - X_" +
                       std::to_string(k + 1)});
  } else if (e == 1 || e == -1) {
    std::array<int, 3> rest{};
    int n = 0;
    for (int m = 0; m < 4; ++m)
      if (m != li) rest[n++] = m;
    for (int a = 0; a < 3; ++a) {
      int i = rest[a], j = rest[(a + 1) % 3], k = rest[(a + 2) % 3];
      Rat val(0);
      val -= eps.val[i] > 0 ? x[i] : Rat(-x[i]);
      val += eps.val[j] > 0 ? x[j] : Rat(-x[j]);
      val += eps.val[k] > 0 ? x[k] : Rat(-x[k]);
      out.push_back({val, dual_edge(static_cast<Tri>(i), l),
                     "-e_" + std::to_string(i + 1) + "X_" +
                         std::to_string(i + 1) + " + e_" +
                         std::to_string(j + 1) + "X_" + std::to_string(j + 1) +
                         " + e_" + std::to_string(k + 1) + "X_" +
                         std::to_string(k + 1)});
    }
  }
  return out;
}

// The two same-signed triangle pairs of an e = 0 sign vector, negative pair
// first.
std::array<std::array<int, 2>, 2> same_sign_pairs(const SignVector& eps) {
  std::array<std::array<int, 2>, 2> out{};
  int a = 0, b = 0;
  for (int m = 0; m < 4; ++m)
    if (eps.val[m] < 0)
      out[0][a++] = m;
    else
      out[1][b++] = m;
  return out;
}

std::optional<ReductionWitness> find_e0_witness(const Coords4<Rat>& x,
                                                const SignVector& eps,
                                                const TreeAddress& addr) {
  for (const auto& pr : same_sign_pairs(eps)) {
    if (!sq_gti_satisfied(x, pr[0], pr[1])) continue;
    ReductionWitness w;
    w.pair_i = pr[0];
    w.pair_j = pr[1];
    w.holonomy = edge_curve_trace(x, eps, pr[0], pr[1]);
    w.address = addr;
    return w;
  }
  return std::nullopt;
}

// Breadth-first search for a non-hyperbolic arc curve near a chart where the
// generalized triangle inequalities hold.  The six curves of the stopping
// chart itself need not contain one, but a witness lives within a couple of
// switches; see the reduction tests.
std::optional<ReductionWitness> find_e1_witness(const Coords4<Rat>& x,
                                                const SignVector& eps,
                                                const TreeAddress& addr,
                                                int depth = 8) {
  struct Node {
    Coords4<Rat> coords;
    SignVector signs;
    TreeAddress address;
    int depth;
  };
  std::deque<Node> queue{{x, eps, addr, 0}};
  std::set<std::string> seen{address_to_string(addr)};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        auto h = edge_curve_trace(node.coords, node.signs, i, j);
        if (cmp(h.abs_trace, Rat(2)) <= 0)
          return ReductionWitness{i, j, h, node.address};
      }
    if (node.depth == depth) continue;
    for (Tri l : all_tris) {
      TreeAddress next = neighbors(node.address)[idx(l)];
      if (!seen.insert(address_to_string(next)).second) continue;
      try {
        auto sw = triangle_switch(node.coords, node.signs, l);
        normalize_coords(sw.coords);
        queue.push_back({sw.coords, sw.signs, next, node.depth + 1});
      } catch (const Inadmissible&) {
      }
    }
  }
  return std::nullopt;
}

DiagnosticsRow make_row(int step, const Coords4<Rat>& x, const SignVector& eps,
                        int euler) {
  DiagnosticsRow row;
  row.step = step;
  Rat total = x[0] + x[1] + x[2] + x[3];
  if (euler == 0) {
    auto pairs = same_sign_pairs(eps);
    Rat u = (x[pairs[0][0]] + x[pairs[0][1]]) / total - Rat(1, 2);
    if (sgn(u) < 0) u = -u;
    row.u = u;
    auto defect = [&](double p, double q, double r) {
      return std::max({std::sqrt(p) - std::sqrt(q) - std::sqrt(r),
                       std::sqrt(q) - std::sqrt(p) - std::sqrt(r),
                       std::sqrt(r) - std::sqrt(p) - std::sqrt(q)});
    };
    double t = total.get_d();
    double pi = x[pairs[0][0]].get_d() / t, pj = x[pairs[0][1]].get_d() / t;
    double qk = x[pairs[1][0]].get_d() / t, ql = x[pairs[1][1]].get_d() / t;
    row.h = defect(pi, pj, qk + ql);
    row.k = defect(qk, ql, pi + pj);
  } else {
    std::array<Rat, 4> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    double t = total.get_d();
    Rat low = sorted[0] + sorted[1];
    double a = low.get_d() / t;
    double b = sorted[2].get_d() / t;
    double c = sorted[3].get_d() / t;
    row.a = a;
    row.b = b;
    row.c = c;
    Rat ra = (sorted[0] + sorted[1]) / total, rb = sorted[2] / total,
        rc = sorted[3] / total;
    if (cmp(rc, ra + rb) > 0 && cmp(rb, ra) > 0)
      row.region = 'L';
    else if (cmp(rb, ra + rc) > 0 && cmp(rc, ra) > 0)
      row.region = 'R';
    else
      row.region = '-';
  }
  return row;
}

}  // namespace

std::string outcome_name(ReductionOutcome o) {
  switch (o) {
    case ReductionOutcome::FoundNonAdmissibleEdge:
      return "found-non-admissible-edge";
    case ReductionOutcome::FoundGtiWitness:
      return "found-gti-witness";
    case ReductionOutcome::FoundSqGtiWitness:
      return "found-sqgti-witness";
    case ReductionOutcome::StepLimit:
      return "step-limit";
    case ReductionOutcome::StepLimitTie:
      return "step-limit-tie";
  }
  return "?";
}

std::pair<ReductionLog, ReductionDiagnostics> trace_reduce(
    const Coords4<Rat>& x0, const SignVector& eps0, int max_steps) {
  int euler = euler_class(eps0);
  if (euler != 0 && euler != 1 && euler != -1)
    throw Unsupported("trace reduction needs |euler| <= 1");
  require_positive(x0);
  signs_at_cusps(x0, eps0);  // reject degenerate charts up front

  ReductionLog log;
  ReductionDiagnostics diag;
  diag.euler_zero = euler == 0;

  Coords4<Rat> x = x0;
  normalize_coords(x);
  SignVector eps = eps0;
  TreeAddress addr;

  for (int step = 0;; ++step) {
    log.steps.push_back({addr, x, eps, -1});
    diag.rows.push_back(make_row(step, x, eps, euler));

    if (euler == 0) {
      if (auto w = find_e0_witness(x, eps, addr)) {
        log.outcome = ReductionOutcome::FoundSqGtiWitness;
        log.witness = w;
        return {log, diag};
      }
    } else {
      if (gti_satisfied(x)) {
        log.outcome = ReductionOutcome::FoundGtiWitness;
        log.witness = find_e1_witness(x, eps, addr);
        return {log, diag};
      }
    }

    if (step == max_steps) {
      log.outcome = ReductionOutcome::StepLimit;
      return {log, diag};
    }

    // unique maximum
    int max_i = 0;
    for (int i = 1; i < 4; ++i)
      if (cmp(x[i], x[max_i]) > 0) max_i = i;
    bool tie = false;
    for (int i = 0; i < 4; ++i)
      if (i != max_i && cmp(x[i], x[max_i]) == 0) tie = true;
    if (tie) {
      log.outcome = ReductionOutcome::StepLimitTie;
      return {log, diag};
    }

    Tri l = static_cast<Tri>(max_i);
    for (const auto& q : switch_quantities(x, eps, l)) {
      if (sgn(q.value) == 0) {
        log.outcome = ReductionOutcome::FoundNonAdmissibleEdge;
        log.inadmissible_edge =
            "edge " + name(q.new_edge) + ": " + q.text + " = 0 at " +
            address_to_string(neighbors(addr)[idx(l)]);
        return {log, diag};
      }
    }
    auto sw = triangle_switch(x, eps, l);
    normalize_coords(sw.coords);
    log.steps.back().switched = max_i;
    x = sw.coords;
    eps = sw.signs;
    addr = neighbors(addr)[idx(l)];
  }
}

Coords4<Rat> sample_simplex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::array<double, 4> gamma{};
  double total = 0;
  for (auto& g : gamma) {
    g = -std::log(1.0 - unif(rng));
    total += g;
  }
  constexpr long kDen = 1 << 16;
  Coords4<Rat> x;
  for (int i = 0; i < 4; ++i) {
    long num = std::lround(gamma[i] / total * kDen);
    x[i] = rat(std::max(1L, num), kDen);
  }
  return x;
}

std::pair<Coords4<Rat>, SignVector> sample_component(
    int euler, const std::array<int, 3>& signs, std::mt19937_64& rng) {
  if (!component_allowed(euler, signs))
    throw EmptyComponent("no type-preserving representations with euler " +
                         std::to_string(euler) + " and this sign vector");
  auto eps_choices = sign_vectors_with_euler(euler);
  for (;;) {
    const SignVector& eps = eps_choices[rng() % eps_choices.size()];
    Coords4<Rat> x = sample_simplex(rng);
    try {
      ComponentLabel label = classify(x, eps);
      if (label.euler == euler && label.signs == signs) return {x, eps};
    } catch (const DegenerateCusp&) {
    }
  }
}

namespace {

void walk_rec(const Coords4<Rat>& x, const SignVector& eps,
              const TreeAddress& addr, int depth, WalkReport& report) {
  ++report.charts_visited;
  if (depth == 0) return;
  for (Tri l : all_tris) {
    if (!addr.word.empty() && addr.word.back() == (std::uint8_t)idx(l))
      continue;  // backtracking re-enters a chart already known admissible
    TreeAddress next = addr;
    next.word.push_back((std::uint8_t)idx(l));
    bool zero = false;
    for (const auto& q : switch_quantities(x, eps, l))
      if (sgn(q.value) == 0) {
        report.zeros.push_back({next, q.text + " = 0 (edge " +
                                           name(q.new_edge) + ")"});
        zero = true;
      }
    if (zero) continue;
    int e = euler_class(eps);
    if (e == 2 || e == -2) continue;  // all-Ptolemy: nothing can vanish
    auto sw = triangle_switch(x, eps, l);
    normalize_coords(sw.coords);
    walk_rec(sw.coords, sw.signs, next, depth - 1, report);
  }
}

}  // namespace

WalkReport admissibility_walk(const Coords4<Rat>& x, const SignVector& eps,
                              int depth) {
  require_positive(x);
  WalkReport report;
  if (depth <= 0) return report;
  Coords4<Rat> c = x;
  normalize_coords(c);
  walk_rec(c, eps, TreeAddress{}, depth, report);
  return report;
}

namespace {

void scan_rec(const Coords4<Rat>& x, const SignVector& eps,
              const TreeAddress& addr, int depth, ScanReport& report) {
  ++report.charts_visited;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto h = edge_curve_trace(x, eps, i, j);
      if (report.charts_visited == 1 && i == 0 && j == 1) {
        report.min_trace = h.abs_trace;
        report.min_address = addr;
      } else if (cmp(h.abs_trace, report.min_trace) < 0) {
        report.min_trace = h.abs_trace;
        report.min_address = addr;
      }
      if (cmp(h.abs_trace, Rat(2)) <= 0 && report.non_hyperbolic.size() < 100)
        report.non_hyperbolic.push_back({addr, i, j, h});
    }
  if (depth == 0) return;
  for (Tri l : all_tris) {
    if (!addr.word.empty() && addr.word.back() == (std::uint8_t)idx(l))
      continue;
    TreeAddress next = addr;
    next.word.push_back((std::uint8_t)idx(l));
    try {
      auto sw = triangle_switch(x, eps, l);
      normalize_coords(sw.coords);
      scan_rec(sw.coords, sw.signs, next, depth - 1, report);
    } catch (const Inadmissible&) {
      // a parabolic arc curve: surface it as a non-hyperbolic finding
      if (report.non_hyperbolic.size() < 100)
        report.non_hyperbolic.push_back(
            {next, -1, -1,
             Holonomy<Rat>{Rat(2), IsomKind::Parabolic, std::nullopt}});
    }
  }
}

}  // namespace

ScanReport hyperbolicity_scan(const Coords4<Rat>& x, const SignVector& eps,
                              int depth) {
  int e = euler_class(eps);
  if (e != 1 && e != -1)
    throw Unsupported("hyperbolicity scan applies to Euler class +-1 only");
  require_positive(x);
  ScanReport report;
  Coords4<Rat> c = x;
  normalize_coords(c);
  scan_rec(c, eps, TreeAddress{}, depth, report);
  return report;
}

SeparationReport e0_separation_check(const Coords4<Rat>& x,
                                     const SignVector& eps) {
  if (euler_class(eps) != 0)
    throw Unsupported("separation check applies to Euler class 0 only");
  SeparationReport report;
  report.opposite_all_hyperbolic = true;
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      PairStatus st;
      st.pair_i = i;
      st.pair_j = j;
      st.same_sign = eps.val[i] == eps.val[j];
      st.holonomy = edge_curve_trace(x, eps, i, j);  // throws DegenerateCusp
      if (!st.same_sign && st.holonomy.kind != IsomKind::Hyperbolic)
        report.opposite_all_hyperbolic = false;
      if (st.same_sign && st.holonomy.kind != IsomKind::Hyperbolic)
        ++report.non_hyperbolic_same_sign;
      report.pairs[n++] = st;
    }
  return report;
}

}  // namespace charvar
