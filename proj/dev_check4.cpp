// Which T-value sources satisfy the multiplicative trace-identity
// consistency (T_ij = |a_i a_j +- 2| for some real a)?  Checked per Euler
// class for: engine values, printed closed forms, resolved closed forms.
#include <cstdio>
#include <random>
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

static int consistent_choices(const std::array<Rat, 6>& T) {
  int good = 0;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<Rat, 6> P;
    for (int p = 0; p < 6; ++p) {
      Rat x = (mask >> p) & 1 ? Rat(T[p] + 2) : Rat(T[p] - 2);
      P[p] = x * x;
    }
    Rat prod = P[pair_tab(0, 1)] * P[pair_tab(2, 3)];
    if (P[pair_tab(0, 2)] * P[pair_tab(1, 3)] != prod) continue;
    if (P[pair_tab(0, 3)] * P[pair_tab(1, 2)] != prod) continue;
    ++good;
  }
  return good;
}

int main() {
  std::mt19937_64 rng(7);
  auto rand_lambda = [&]() {
    EdgeLengths<Rat> l;
    for (auto& v : l) v = rat(1 + (long)(rng() % 12), 1 + (long)(rng() % 7));
    return l;
  };
  for (int e : {0, 1, -1}) {
    long eng = 0, pr = 0, rs = 0, n = 0;
    for (int trial = 0; trial < 5; ++trial) {
      auto l = rand_lambda();
      auto x = triangle_coords(l);
      for (auto eps : sign_vectors_with_euler(e)) {
        std::array<Rat, 6> Te, Tp, Tr;
        bool skip = false;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) {
            int p = pair_tab(i, j);
            Te[p] = curve_trace(edge_curve(dual_edge(static_cast<Tri>(i),
                                                     static_cast<Tri>(j))),
                                l, eps)
                        .abs_trace;
            try {
              Tp[p] = edge_curve_trace(x, eps, i, j, kDefaultTolerance,
                                       TraceConvention::Printed)
                          .abs_trace;
              Tr[p] = edge_curve_trace(x, eps, i, j, kDefaultTolerance,
                                       TraceConvention::Resolved)
                          .abs_trace;
            } catch (const DomainError&) {
              skip = true;
            }
          }
        if (skip) continue;
        ++n;
        eng += consistent_choices(Te) ? 1 : 0;
        pr += consistent_choices(Tp) ? 1 : 0;
        rs += consistent_choices(Tr) ? 1 : 0;
      }
    }
    std::printf("e=%+d charts=%ld engine-consistent=%ld printed=%ld resolved=%ld\n",
                e, n, eng, pr, rs);
  }
  return 0;
}
