// Validate lemma-level switches against the flip composite: coordinates
// (projective), sign vectors, involution, cusp-sign and true-trace
// invariance; plus the worked examples.
#include <cstdio>
#include <random>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/switches.hpp"
#include "charvar/traces.hpp"

using namespace charvar;

int main() {
  std::mt19937_64 rng(4242);
  auto rand_lambda = [&]() {
    EdgeLengths<Rat> l;
    for (auto& v : l) v = rat(1 + (long)(rng() % 15), 1 + (long)(rng() % 9));
    return l;
  };
  long bad_coords = 0, bad_signs = 0, bad_cusp = 0, bad_trace = 0,
       bad_invol = 0, total = 0, skipped = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto lam = rand_lambda();
    auto x = triangle_coords(lam);
    for (int e : {0, 1, -1, 2, -2}) {
      for (auto eps : sign_vectors_with_euler(e)) {
        for (Tri l : all_tris) {
          ++total;
          std::pair<EdgeLengths<Rat>, SignVector> flip_out;
          try {
            flip_out = switch_via_flips(lam, eps, l);
          } catch (const Inadmissible&) {
            ++skipped;
            continue;
          }
          auto x_flip = triangle_coords(flip_out.first);
          if (e == 2 || e == -2) continue;  // no lemma-level fast path
          SwitchResult<Rat> lem;
          try {
            lem = triangle_switch(x, eps, l);
          } catch (const Inadmissible&) {
            ++skipped;
            continue;
          }
          if (!proj_equal(lem.coords, x_flip)) {
            if (bad_coords++ < 3)
              std::printf("COORD MISMATCH e=%d l=%s\n", e, name(l).c_str());
          }
          if (!(lem.signs == flip_out.second)) {
            if (bad_signs++ < 6) {
              std::printf("SIGN MISMATCH e=%d l=%s eps=(%d,%d,%d,%d) -> lemma (%d,%d,%d,%d) flips (%d,%d,%d,%d) X=(%s,%s,%s,%s)\n",
                          e, name(l).c_str(), eps.val[0], eps.val[1],
                          eps.val[2], eps.val[3], lem.signs.val[0],
                          lem.signs.val[1], lem.signs.val[2], lem.signs.val[3],
                          flip_out.second.val[0], flip_out.second.val[1],
                          flip_out.second.val[2], flip_out.second.val[3],
                          rat_to_string(x[0]).c_str(), rat_to_string(x[1]).c_str(),
                          rat_to_string(x[2]).c_str(), rat_to_string(x[3]).c_str());
            }
          }
          // cusp signs invariant
          try {
            auto before = signs_at_cusps(x, eps);
            auto after = signs_at_cusps(lem.coords, lem.signs);
            if (before != after) ++bad_cusp;
          } catch (const DegenerateCusp&) {
          }
          // involution
          try {
            auto back = triangle_switch(lem.coords, lem.signs, l);
            if (!proj_equal(back.coords, x) || !(back.signs == eps))
              ++bad_invol;
          } catch (const Inadmissible&) {
          }
          // surviving edge traces (the three edges of the complement pair
          // structure: edges not in t_l keep their curves)
          for (Edge ed : all_edges) {
            if (tri_has_edge(l, ed)) continue;
            Rat before, after;
            try {
              before = edge_curve_trace(x, eps, ed).abs_trace;
              after = edge_curve_trace(lem.coords, lem.signs, ed).abs_trace;
            } catch (const DegenerateCusp&) {
              continue;
            }
            if (before != after) {
              if (bad_trace++ < 5)
                std::printf("TRACE MISMATCH e=%d l=%s edge=%s %s -> %s\n", e,
                            name(l).c_str(), name(ed).c_str(),
                            rat_to_string(before).c_str(),
                            rat_to_string(after).c_str());
            }
          }
        }
      }
    }
  }
  std::printf("total=%ld skipped=%ld bad_coords=%ld bad_signs=%ld bad_cusp=%ld bad_trace=%ld bad_invol=%ld\n",
              total, skipped, bad_coords, bad_signs, bad_cusp, bad_trace,
              bad_invol);

  // worked examples
  {
    Coords4<Rat> x{rat(1), rat(1), rat(1), rat(2)};
    auto r = triangle_switch_e0(x, eps_pair(Tri::t1, Tri::t2), Tri::t4);
    std::printf("e0 example: X'=(%s,%s,%s,%s) signs (%d,%d,%d,%d)\n",
                rat_to_string(r.coords[0]).c_str(),
                rat_to_string(r.coords[1]).c_str(),
                rat_to_string(r.coords[2]).c_str(),
                rat_to_string(r.coords[3]).c_str(), r.signs.val[0],
                r.signs.val[1], r.signs.val[2], r.signs.val[3]);
  }
  {
    Coords4<Rat> x{rat(1), rat(1), rat(1), rat(4)};
    auto r = triangle_switch_e1(x, eps_one(Tri::t4), Tri::t4);
    std::printf("e1 example A: X'=(%s,%s,%s,%s) neg at %d\n",
                rat_to_string(r.coords[0]).c_str(),
                rat_to_string(r.coords[1]).c_str(),
                rat_to_string(r.coords[2]).c_str(),
                rat_to_string(r.coords[3]).c_str(),
                [&] { for (int i = 0; i < 4; ++i) if (r.signs.val[i] < 0) return i + 1; return 0; }());
  }
  {
    Coords4<Rat> x{rat(4), rat(1), rat(1), rat(1)};
    auto r = triangle_switch_e1(x, eps_one(Tri::t2), Tri::t4);
    std::printf("e1 example B: X'=(%s,%s,%s,%s) neg at %d\n",
                rat_to_string(r.coords[0]).c_str(),
                rat_to_string(r.coords[1]).c_str(),
                rat_to_string(r.coords[2]).c_str(),
                rat_to_string(r.coords[3]).c_str(),
                [&] { for (int i = 0; i < 4; ++i) if (r.signs.val[i] < 0) return i + 1; return 0; }());
  }
  return 0;
}
