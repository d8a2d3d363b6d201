#include <doctest.h>

#include <map>
#include <set>

#include "charvar/model.hpp"

using namespace charvar;

TEST_CASE("triangle edge triples match the balanced triangulation") {
  const auto& m = canonical_model();
  auto triple = [&](Tri t) {
    std::set<Edge> s(m.tri_edges[idx(t)].begin(), m.tri_edges[idx(t)].end());
    return s;
  };
  CHECK(triple(Tri::t1) == std::set<Edge>{Edge::b, Edge::d, Edge::f});
  CHECK(triple(Tri::t2) == std::set<Edge>{Edge::c, Edge::d, Edge::e});
  CHECK(triple(Tri::t3) == std::set<Edge>{Edge::a, Edge::e, Edge::f});
  CHECK(triple(Tri::t4) == std::set<Edge>{Edge::a, Edge::b, Edge::c});
}

TEST_CASE("edge endpoints pair the punctures evenly") {
  auto ends = [](Edge e) {
    auto a = edge_ends(e);
    return std::set<Vert>{a[0], a[1]};
  };
  CHECK(ends(Edge::a) == std::set<Vert>{Vert::v1, Vert::v2});
  CHECK(ends(Edge::d) == std::set<Vert>{Vert::v1, Vert::v2});
  CHECK(ends(Edge::b) == std::set<Vert>{Vert::v2, Vert::v3});
  CHECK(ends(Edge::e) == std::set<Vert>{Vert::v2, Vert::v3});
  CHECK(ends(Edge::c) == std::set<Vert>{Vert::v3, Vert::v1});
  CHECK(ends(Edge::f) == std::set<Vert>{Vert::v3, Vert::v1});
}

TEST_CASE("edge to triangle-pair duality is a bijection onto all 6 pairs") {
  std::set<std::set<Tri>> pairs;
  for (Edge e : all_edges) {
    auto d = dual_pair(e);
    CHECK(d[0] != d[1]);
    CHECK(tri_has_edge(d[0], e));
    CHECK(tri_has_edge(d[1], e));
    pairs.insert({d[0], d[1]});
  }
  CHECK(pairs.size() == 6);
  CHECK(dual_edge(Tri::t1, Tri::t2) == Edge::d);
  CHECK(dual_edge(Tri::t3, Tri::t4) == Edge::a);
}

TEST_CASE("Euler characteristic and vertex links") {
  // V - E + F = 3 - 6 + 4 = 1, the closed projective plane
  CHECK(kNumVerts - kNumEdges + kNumTris == 1);
  const auto& m = canonical_model();
  for (Vert v : all_verts) {
    const auto& link = m.vertex_link[idx(v)];
    std::set<Tri> tris;
    for (std::size_t i = 0; i < link.size(); ++i) {
      const auto& step = link[i];
      tris.insert(step.tri);
      // corner edges are incident to the puncture
      for (Edge e : {step.enter, step.exit}) {
        auto ends = edge_ends(e);
        CHECK((ends[0] == v || ends[1] == v));
      }
      // consecutive corners share the crossed edge
      CHECK(step.exit == link[(i + 1) % link.size()].enter);
    }
    CHECK(tris.size() == 4);  // one corner per triangle: a single 4-cycle
  }
}

TEST_CASE("third_edge and bad steps") {
  CHECK(third_edge(Tri::t1, Edge::b, Edge::d) == Edge::f);
  CHECK_THROWS_AS(third_edge(Tri::t1, Edge::a, Edge::b), BadStep);
  CurveDescriptor broken{{{Tri::t1, Edge::b, Edge::b, Turn::Left}}, true};
  CHECK_THROWS_AS(validate_descriptor(broken), BadStep);
}

TEST_CASE("edge curves cross the edges of the complementary triangles") {
  for (Edge e : all_edges) {
    const auto& desc = edge_curve(e);
    CHECK(desc.steps.size() == 6);
    CHECK(desc.two_sided);
    validate_descriptor(desc);
    std::multiset<Edge> crossed, expected;
    for (const auto& s : desc.steps) crossed.insert(s.enter);
    for (Tri t : complement_pair(e))
      for (Edge x : canonical_model().tri_edges[idx(t)]) expected.insert(x);
    CHECK(crossed == expected);
  }
}

TEST_CASE("peripheral curves cut each corner of the link once") {
  for (Vert v : all_verts) {
    const auto& desc = peripheral_curve(v);
    CHECK(desc.steps.size() == 4);
    validate_descriptor(desc);
    std::set<Tri> seen;
    for (const auto& s : desc.steps) {
      seen.insert(s.tri);
      CHECK(s.turn == Turn::Left);
    }
    CHECK(seen.size() == 4);
  }
}

TEST_CASE("one-sided squares stay clear of their dual triangle") {
  for (Tri t : all_tris) {
    const auto& desc = one_sided_square(t);
    CHECK(desc.steps.size() == 6);
    validate_descriptor(desc);
    for (const auto& s : desc.steps) {
      CHECK(s.tri != t);
      CHECK(!tri_has_edge(t, s.enter));
    }
  }
}

TEST_CASE("switch words form the 4-regular tree") {
  TreeAddress root;
  auto around_root = neighbors(root);
  std::set<std::string> distinct;
  for (const auto& n : around_root) {
    CHECK(n.word.size() == 1);
    CHECK(tree_distance(root, n) == 1);
    distinct.insert(address_to_string(n));
  }
  CHECK(distinct.size() == 4);

  TreeAddress s1{{0}};
  auto around_s1 = neighbors(s1);
  CHECK(around_s1[0] == root);  // involution cancels
  for (int i = 1; i < 4; ++i) CHECK(around_s1[i].word.size() == 2);

  TreeAddress s12{{0, 1}};
  CHECK(tree_distance(s12, root) == 2);
  CHECK(tree_distance(s12, TreeAddress{{0, 2}}) == 2);
  CHECK(tree_distance(s12, s12) == 0);
  CHECK(!is_reduced(TreeAddress{{1, 1}}));
}

TEST_CASE("model permutations preserve incidence") {
  TriPermutation p = tri_swap(Tri::t1, Tri::t4);
  CHECK(p(Tri::t1) == Tri::t4);
  for (Tri t : all_tris)
    for (Edge e : canonical_model().tri_edges[idx(t)])
      CHECK(tri_has_edge(p(t), p(e)));
  for (Edge e : all_edges) {
    auto ends = edge_ends(e);
    auto mapped = edge_ends(p(e));
    CHECK(std::set<Vert>{p(ends[0]), p(ends[1])} ==
          std::set<Vert>{mapped[0], mapped[1]});
  }
}
