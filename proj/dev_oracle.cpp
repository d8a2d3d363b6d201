// Development-time search for the frozen curve descriptor tables: finds the
// standard-position walks + turn patterns whose engine traces match the
// closed-form traces of the six distinguished curves (e = 0 forms are
// unambiguous in the source; e = +-1 decides the +- pairing), and the turn
// patterns of the one-sided squares via Fuchsian positivity.
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/traces.hpp"

using namespace charvar;

struct Walk {
  std::vector<CurveStep> steps;  // turns filled later
};

static std::vector<Walk> closed_walks(Edge target, int len,
                                      const std::multiset<int>& want) {
  std::vector<Walk> out;
  // start: first crossed edge is `target`'s companion? enumerate all start
  // edges+triangles; dedupe by canonical rotation at the end.
  std::set<std::vector<int>> seen;
  for (Edge start_edge : all_edges) {
    for (Tri start_tri : dual_pair(start_edge)) {
      std::vector<CurveStep> steps;
      std::multiset<int> used;
      std::function<void(Tri, Edge)> dfs = [&](Tri t, Edge enter) {
        if ((int)steps.size() == len) {
          if (enter == start_edge && t == start_tri && used == want) {
            // canonical form for dedupe: minimal rotation of (tri,enter,exit)
            std::vector<int> code;
            for (auto& s : steps)
              code.push_back(idx(s.tri) * 64 + idx(s.enter) * 8 + idx(s.exit));
            std::vector<int> best = code;
            for (size_t r = 1; r < code.size(); ++r) {
              std::rotate(code.begin(), code.begin() + 1, code.end());
              if (code < best) best = code;
            }
            if (seen.insert(best).second) out.push_back({steps});
          }
          return;
        }
        for (Edge exit : canonical_model().tri_edges[idx(t)]) {
          if (exit == enter) continue;
          if (used.count(idx(exit)) >= want.count(idx(exit))) continue;
          auto d = dual_pair(exit);
          Tri next = d[0] == t ? d[1] : d[0];
          steps.push_back({t, enter, exit, Turn::Left});
          used.insert(idx(exit));
          dfs(next, exit);
          used.erase(used.find(idx(exit)));
          steps.pop_back();
        }
      };
      // Each crossing is one step's exit; the start edge is the final exit.
      dfs(start_tri, start_edge);
    }
  }
  return out;
}

int main() {
  std::mt19937_64 rng(12345);
  auto rand_lambda = [&]() {
    EdgeLengths<Rat> l;
    for (auto& v : l) v = rat(1 + (long)(rng() % 20), 1 + (long)(rng() % 9));
    return l;
  };
  std::vector<EdgeLengths<Rat>> lambdas;
  for (int i = 0; i < 8; ++i) lambdas.push_back(rand_lambda());

  std::vector<SignVector> e0, e1;
  for (auto& s : sign_vectors_with_euler(0)) e0.push_back(s);
  for (auto& s : sign_vectors_with_euler(1)) e1.push_back(s);
  for (auto& s : sign_vectors_with_euler(-1)) e1.push_back(s);

  for (Edge arc : all_edges) {
    auto comp = complement_pair(arc);
    std::multiset<int> want;
    for (Tri t : comp)
      for (Edge e : canonical_model().tri_edges[idx(t)]) want.insert(idx(e));
    auto walks = closed_walks(arc, 6, want);
    std::printf("edge %s: %zu walks\n", name(arc).c_str(), walks.size());
    int hits = 0;
    for (auto& w : walks) {
      for (int mask = 0; mask < 64; ++mask) {
        CurveDescriptor desc{w.steps, true};
        for (int i = 0; i < 6; ++i)
          desc.steps[i].turn = (mask >> i) & 1 ? Turn::Right : Turn::Left;
        bool ok0 = true;
        for (auto& eps : e0) {
          for (auto& l : lambdas) {
            auto x = triangle_coords(l);
            Rat s(0);
            for (int m = 0; m < 4; ++m)
              s += eps.val[m] > 0 ? x[m] : Rat(-x[m]);
            if (sgn(s) == 0) continue;
            auto engine = curve_trace(desc, l, eps);
            auto closed = edge_curve_trace(x, eps, arc);
            if (engine.abs_trace != closed.abs_trace) {
              ok0 = false;
              break;
            }
          }
          if (!ok0) break;
        }
        if (!ok0) continue;
        // check which |e|=1 convention the engine realizes
        bool resolved_ok = true, printed_ok = true;
        for (auto& eps : e1) {
          for (auto& l : lambdas) {
            auto x = triangle_coords(l);
            auto engine = curve_trace(desc, l, eps);
            if (engine.abs_trace !=
                edge_curve_trace(x, eps, arc, kDefaultTolerance,
                                 TraceConvention::Resolved)
                    .abs_trace)
              resolved_ok = false;
            if (engine.abs_trace !=
                edge_curve_trace(x, eps, arc, kDefaultTolerance,
                                 TraceConvention::Printed)
                    .abs_trace)
              printed_ok = false;
          }
        }
        ++hits;
        std::printf("  MATCH e0 walk, turns mask=%02x resolved=%d printed=%d: ",
                    mask, (int)resolved_ok, (int)printed_ok);
        for (auto& s : desc.steps)
          std::printf("(%s,%s,%s,%c)", name(s.tri).c_str(),
                      name(s.enter).c_str(), name(s.exit).c_str(),
                      ((mask >> (&s - desc.steps.data())) & 1) ? 'R' : 'L');
        std::printf("\n");
      }
    }
    std::printf("  total matches: %d\n", hits);
  }

  // one-sided squares: walk is forced; find turn patterns with
  // (tr gamma)^2 = |tr gamma^2| - 2 > 0 on the all-plus locus and >= 0
  // everywhere, for many random lambdas.
  std::vector<EdgeLengths<Rat>> many;
  for (int i = 0; i < 60; ++i) many.push_back(rand_lambda());
  std::vector<SignVector> all16;
  for (int e : {0, 1, -1, 2, -2})
    for (auto& s : sign_vectors_with_euler(e)) all16.push_back(s);
  for (Tri t : all_tris) {
    // build the doubled corridor walk around the complement of t
    std::multiset<int> want;
    for (Edge e : all_edges)
      if (!tri_has_edge(t, e)) {
        want.insert(idx(e));
        want.insert(idx(e));
      }
    Edge start = Edge::a;
    for (Edge e : all_edges)
      if (!tri_has_edge(t, e)) {
        start = e;
        break;
      }
    auto walks = closed_walks(start, 6, want);
    std::printf("square of one-sided dual to %s: %zu walks\n", name(t).c_str(),
                walks.size());
    for (auto& w : walks) {
      for (int mask = 0; mask < 64; ++mask) {
        CurveDescriptor desc{w.steps, true};
        for (int i = 0; i < 6; ++i)
          desc.steps[i].turn = (mask >> i) & 1 ? Turn::Right : Turn::Left;
        bool ok = true;
        for (auto& l : many) {
          auto h = curve_trace(desc, l, eps_all_plus());
          if (cmp(h.abs_trace, Rat(2)) <= 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (auto& eps : all16) {
          for (auto& l : many) {
            auto h = curve_trace(desc, l, eps);
            if (cmp(h.abs_trace, Rat(2)) < 0) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) continue;
        std::printf("  candidate mask=%02x: ", mask);
        for (auto& s : desc.steps)
          std::printf("(%s,%s,%s,%c)", name(s.tri).c_str(),
                      name(s.enter).c_str(), name(s.exit).c_str(),
                      ((mask >> (&s - desc.steps.data())) & 1) ? 'R' : 'L');
        std::printf("\n");
      }
    }
  }
  return 0;
}
