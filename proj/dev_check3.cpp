// Solve for the expected (tr gamma_i)^2 values from the six (trusted)
// edge-curve traces via tr(pair curve) = |x_i x_j +- 2|, then search closed
// walks for a descriptor realizing gamma_4^2.
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/traces.hpp"

using namespace charvar;

static int pair_tab(int i, int j) {
  static const int tab[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return tab[i][j];
}

int main(int argc, char** argv) {
  bool complementary = argc > 1 && std::string(argv[1]) == "comp";
  int target = argc > 2 ? atoi(argv[2]) : 3;
  std::mt19937_64 rng(7);
  auto rand_lambda = [&]() {
    EdgeLengths<Rat> l;
    for (auto& v : l) v = rat(1 + (long)(rng() % 12), 1 + (long)(rng() % 7));
    return l;
  };

  std::vector<std::pair<EdgeLengths<Rat>, SignVector>> charts;
  for (int trial = 0; trial < 6; ++trial) {
    auto l = rand_lambda();
    for (int e : {1, -1, 0, 2, -2})
      for (auto eps : sign_vectors_with_euler(e)) charts.push_back({l, eps});
  }

  // Candidate sq4 values per chart from consistent sign choices.
  std::vector<std::set<Rat>> sq4_candidates;
  for (auto& [l, eps] : charts) {
    std::array<Rat, 6> T;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        int k = -1, m = -1;
        for (int q = 0; q < 4; ++q)
          if (q != i && q != j) (k < 0 ? k : m) = q;
        int pi = complementary ? pair_tab(k, m) : pair_tab(i, j);
        T[pi] = curve_trace(edge_curve(dual_edge(static_cast<Tri>(i),
                                                 static_cast<Tri>(j))),
                            l, eps)
                    .abs_trace;
      }
    std::set<Rat> cands;
    for (int mask = 0; mask < 64; ++mask) {
      std::array<Rat, 6> P;
      for (int p = 0; p < 6; ++p) {
        Rat x = (mask >> p) & 1 ? Rat(T[p] + 2) : Rat(T[p] - 2);
        P[p] = x * x;
      }
      // consistency: P12*P34 == P13*P24 == P14*P23
      Rat prod = P[pair_tab(0, 1)] * P[pair_tab(2, 3)];
      if (P[pair_tab(0, 2)] * P[pair_tab(1, 3)] != prod) continue;
      if (P[pair_tab(0, 3)] * P[pair_tab(1, 2)] != prod) continue;
      // sq4^2 = P14*P24/P12 (if P12 != 0)
      int o1 = -1, o2 = -1, o3 = -1;
      for (int q = 0; q < 4; ++q)
        if (q != target) (o1 < 0 ? o1 : (o2 < 0 ? o2 : o3)) = q;
      if (sgn(P[pair_tab(o1, o2)]) == 0) continue;
      Rat sq4sq = P[pair_tab(o1, target)] * P[pair_tab(o2, target)] /
                  P[pair_tab(o1, o2)];
      // sq4 = sqrt of that if a rational square; test candidates as squares
      cands.insert(sq4sq);
    }
    sq4_candidates.push_back(cands);
  }
  std::printf("chart candidate counts:");
  for (auto& c : sq4_candidates) std::printf(" %zu", c.size());
  std::printf("\n");

  // Search closed walks (length 4,6,8) x masks whose value v satisfies
  // v = |tr g4^2| := sq4 + 2 with sq4^2 in the candidate set, per chart.
  for (int len : {4, 6, 8}) {
    std::set<std::vector<int>> seen;
    int found = 0;
    for (Edge start_edge : all_edges) {
      for (Tri start_tri : dual_pair(start_edge)) {
        std::vector<CurveStep> steps;
        std::function<void(Tri, Edge)> dfs = [&](Tri t, Edge enter) {
          if ((int)steps.size() == len) {
            if (enter != start_edge || t != start_tri) return;
            std::vector<int> code;
            for (auto& s : steps)
              code.push_back(idx(s.tri) * 64 + idx(s.enter) * 8 + idx(s.exit));
            std::vector<int> best = code;
            for (size_t r = 1; r < code.size(); ++r) {
              std::rotate(code.begin(), code.begin() + 1, code.end());
              if (code < best) best = code;
            }
            if (!seen.insert(best).second) return;
            for (int mask = 0; mask < (1 << len); ++mask) {
              CurveDescriptor d{steps, true};
              for (int i = 0; i < len; ++i)
                d.steps[i].turn = (mask >> i) & 1 ? Turn::Right : Turn::Left;
              bool ok = true;
              for (size_t ci = 0; ci < charts.size() && ok; ++ci) {
                auto v = curve_trace(d, charts[ci].first, charts[ci].second)
                             .abs_trace;
                Rat sq4 = v - 2;
                if (sgn(sq4) < 0 ||
                    !sq4_candidates[ci].count(Rat(sq4 * sq4)))
                  ok = false;
              }
              if (ok) {
                std::printf("len %d HIT mask=%03x: ", len, mask);
                for (auto& s : d.steps)
                  std::printf("(%s,%s,%s,%c)", name(s.tri).c_str(),
                              name(s.enter).c_str(), name(s.exit).c_str(),
                              d.steps[&s - d.steps.data()].turn == Turn::Right
                                  ? 'R'
                                  : 'L');
                std::printf("\n");
                if (++found > 60) std::exit(0);
              }
            }
            return;
          }
          for (Edge exit : canonical_model().tri_edges[idx(t)]) {
            if (exit == enter) continue;
            auto dp = dual_pair(exit);
            Tri next = dp[0] == t ? dp[1] : dp[0];
            steps.push_back({t, enter, exit, Turn::Left});
            dfs(next, exit);
            steps.pop_back();
          }
        };
        dfs(start_tri, start_edge);
      }
    }
    std::printf("len %d done (%d hits)\n", len, found);
  }
  return 0;
}
