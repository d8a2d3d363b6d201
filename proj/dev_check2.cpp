// Pin down the one-sided-square turn patterns jointly with the edge-curve
// convention via the trace identity: on charts normalized so the identity
// applies, tr(pair curve {i,j}) = -(x_i x_j + 2), hence
// (x_i x_j)^2 = sq_i sq_j with x_i x_j = +-T_{ij} - 2.
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/traces.hpp"

using namespace charvar;

int main() {
  std::mt19937_64 rng(99);
  auto rand_lambda = [&]() {
    EdgeLengths<Rat> l;
    for (auto& v : l) v = rat(1 + (long)(rng() % 12), 1 + (long)(rng() % 7));
    return l;
  };
  const int masks[] = {0x07, 0x0e, 0x15, 0x1c, 0x23, 0x2a, 0x31, 0x38};

  auto sq_val = [&](Tri t, int mask, const EdgeLengths<Rat>& l,
                    const SignVector& eps) {
    CurveDescriptor d = one_sided_square(t);
    for (int i = 0; i < 6; ++i)
      d.steps[i].turn = (mask >> i) & 1 ? Turn::Right : Turn::Left;
    return curve_trace(d, l, eps).abs_trace - 2;
  };

  // surviving (mask_i, mask_j) per unordered pair, across many charts
  std::vector<std::set<std::pair<int, int>>> ok(6);
  auto pair_index = [](int i, int j) {
    static const int tab[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4},
                                  {1, 3, -1, 5}, {2, 4, 5, -1}};
    return tab[i][j];
  };
  for (int p = 0; p < 6; ++p)
    for (int mi : masks)
      for (int mj : masks) ok[p].insert({mi, mj});

  std::vector<std::pair<EdgeLengths<Rat>, SignVector>> charts;
  for (int trial = 0; trial < 30; ++trial) {
    auto l = rand_lambda();
    for (int e : {1, -1})
      for (auto eps : sign_vectors_with_euler(e)) charts.push_back({l, eps});
  }
  for (auto& [l, eps] : charts) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Rat T = curve_trace(edge_curve(dual_edge(static_cast<Tri>(i),
                                                 static_cast<Tri>(j))),
                            l, eps)
                    .abs_trace;
        Rat opt1 = (T - 2) * (T - 2);
        Rat opt2 = (T + 2) * (T + 2);
        // complementary indices
        int k = -1, m = -1;
        for (int q = 0; q < 4; ++q)
          if (q != i && q != j) (k < 0 ? k : m) = q;
        auto& surv = ok[pair_index(k, m)];
        for (auto it = surv.begin(); it != surv.end();) {
          Rat target = sq_val(static_cast<Tri>(k), it->first, l, eps) *
                       sq_val(static_cast<Tri>(m), it->second, l, eps);
          if (target != opt1 && target != opt2)
            it = surv.erase(it);
          else
            ++it;
        }
      }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::printf("pair %d%d survivors:", i + 1, j + 1);
      for (auto& [mi, mj] : ok[pair_index(i, j)])
        std::printf(" (%02x,%02x)", mi, mj);
      std::printf("\n");
    }

  // global assignments consistent across all six pairs
  int found = 0;
  for (int m1 : masks)
    for (int m2 : masks)
      for (int m3 : masks)
        for (int m4 : masks) {
          int m[4] = {m1, m2, m3, m4};
          bool good = true;
          for (int i = 0; i < 4 && good; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (!ok[pair_index(i, j)].count({m[i], m[j]})) {
                good = false;
                break;
              }
          if (good) {
            std::printf("GLOBAL: %02x %02x %02x %02x\n", m1, m2, m3, m4);
            if (++found > 40) return 0;
          }
        }
  std::printf("%d global assignments\n", found);
  return 0;
}
