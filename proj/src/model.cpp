#include "charvar/model.hpp"

#include <algorithm>

namespace charvar {

namespace {

constexpr Edge A = Edge::a, B = Edge::b, C = Edge::c, D = Edge::d, E = Edge::e,
               F = Edge::f;
constexpr Tri T1 = Tri::t1, T2 = Tri::t2, T3 = Tri::t3, T4 = Tri::t4;
constexpr Vert V1 = Vert::v1, V2 = Vert::v2, V3 = Vert::v3;
constexpr Turn L = Turn::Left, R = Turn::Right;

// Triangle/edge/vertex incidences of the balanced triangulation.  The corner
// cycles are forced by these incidences: each triangle has one corner at each
// puncture, and consecutive corners of a link share the edge between them.
const TriangulationModel kModel = {
    // tri_edges
    {{{B, D, F}, {C, D, E}, {A, E, F}, {A, B, C}}},
    // edges: endpoints and the two incident triangles
    {{
        {{V1, V2}, {T3, T4}},  // a
        {{V2, V3}, {T1, T4}},  // b
        {{V3, V1}, {T2, T4}},  // c
        {{V1, V2}, {T1, T2}},  // d
        {{V2, V3}, {T2, T3}},  // e
        {{V3, V1}, {T1, T3}},  // f
    }},
    // vertex links (corner cycles, all-left standard position)
    {{
        {{{T2, C, D, L}, {T1, D, F, L}, {T3, F, A, L}, {T4, A, C, L}}},  // v1
        {{{T1, B, D, L}, {T2, D, E, L}, {T3, E, A, L}, {T4, A, B, L}}},  // v2
        {{{T1, B, F, L}, {T3, F, E, L}, {T2, E, C, L}, {T4, C, B, L}}},  // v3
    }},
};

}  // namespace

const TriangulationModel& canonical_model() { return kModel; }

std::string name(Edge e) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return names[idx(e)];
}

std::string name(Tri t) {
  static const char* names[] = {"t1", "t2", "t3", "t4"};
  return names[idx(t)];
}

std::string name(Vert v) {
  static const char* names[] = {"v1", "v2", "v3"};
  return names[idx(v)];
}

Edge edge_from_name(const std::string& s) {
  for (Edge e : all_edges)
    if (name(e) == s) return e;
  throw DomainError("unknown edge label: " + s);
}

Tri tri_from_name(const std::string& s) {
  for (Tri t : all_tris)
    if (name(t) == s) return t;
  throw DomainError("unknown triangle label: " + s);
}

Vert vert_from_name(const std::string& s) {
  for (Vert v : all_verts)
    if (name(v) == s) return v;
  throw DomainError("unknown vertex label: " + s);
}

bool tri_has_edge(Tri t, Edge e) {
  const auto& edges = kModel.tri_edges[idx(t)];
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Edge third_edge(Tri t, Edge e1, Edge e2) {
  if (e1 == e2 || !tri_has_edge(t, e1) || !tri_has_edge(t, e2))
    throw BadStep("edges " + name(e1) + "," + name(e2) + " do not cut " +
                  name(t));
  for (Edge e : kModel.tri_edges[idx(t)])
    if (e != e1 && e != e2) return e;
  throw BadStep("degenerate triangle");
}

Edge dual_edge(Tri s, Tri t) {
  if (s == t) throw BadStep("dual_edge needs distinct triangles");
  for (Edge e : all_edges) {
    const auto& d = kModel.edges[idx(e)].dual;
    if ((d[0] == s && d[1] == t) || (d[0] == t && d[1] == s)) return e;
  }
  throw BadStep("no shared edge");
}

std::array<Tri, 2> dual_pair(Edge e) { return kModel.edges[idx(e)].dual; }

std::array<Tri, 2> complement_pair(Edge e) {
  const auto& d = kModel.edges[idx(e)].dual;
  std::array<Tri, 2> out{};
  int n = 0;
  for (Tri t : all_tris)
    if (t != d[0] && t != d[1]) out[n++] = t;
  return out;
}

std::array<Vert, 2> edge_ends(Edge e) { return kModel.edges[idx(e)].ends; }

Edge TriPermutation::operator()(Edge e) const {
  auto d = dual_pair(e);
  return dual_edge((*this)(d[0]), (*this)(d[1]));
}

Vert TriPermutation::operator()(Vert v) const {
  // A puncture is determined by the edge class missing it; transport the
  // class through the triangle permutation.
  for (Edge e : all_edges) {
    auto ends = edge_ends(e);
    if (ends[0] != v && ends[1] != v) {
      Edge img = (*this)(e);
      auto img_ends = edge_ends(img);
      for (Vert w : all_verts)
        if (w != img_ends[0] && w != img_ends[1]) return w;
    }
  }
  throw DomainError("bad vertex");
}

TriPermutation tri_swap(Tri from, Tri to) {
  TriPermutation p{{0, 1, 2, 3}};
  std::swap(p.perm[idx(from)], p.perm[idx(to)]);
  return p;
}

void validate_descriptor(const CurveDescriptor& desc) {
  if (desc.steps.empty()) throw BadStep("empty descriptor");
  const std::size_t n = desc.steps.size();
  for (std::size_t k = 0; k < n; ++k) {
    const CurveStep& s = desc.steps[k];
    if (s.enter == s.exit)
      throw BadStep("step enters and exits " + name(s.tri) + " through " +
                    name(s.enter));
    if (!tri_has_edge(s.tri, s.enter) || !tri_has_edge(s.tri, s.exit))
      throw BadStep("step edges not in " + name(s.tri));
    const CurveStep& next = desc.steps[(k + 1) % n];
    if (s.exit != next.enter) throw BadStep("steps are not chained");
    // Crossing the exit edge lands in its other incident triangle.
    auto d = dual_pair(s.exit);
    Tri other = (d[0] == s.tri) ? d[1] : d[0];
    if (next.tri != other) throw BadStep("crossing does not reach next step");
  }
}

namespace {

// Curve tables.  Each edge-curve walk crosses the six edges of the two
// triangles not containing its arc (the shared edge twice); walks and turn
// patterns were frozen from a one-time search against the closed-form traces
// of the six distinguished curves.  tests/curve_oracle_test re-derives them.
const std::array<CurveDescriptor, kNumEdges> kEdgeCurves = {{
    // a: corridor around t1|t2
    {{{T1, B, D, R}, {T2, D, E, R}, {T3, E, F, L}, {T1, F, D, R},
      {T2, D, C, R}, {T4, C, B, L}},
     true},
    // b: corridor around t2|t3
    {{{T3, A, E, R}, {T2, E, D, R}, {T1, D, F, L}, {T3, F, E, R},
      {T2, E, C, R}, {T4, C, A, L}},
     true},
    // c: corridor around t1|t3
    {{{T3, A, F, R}, {T1, F, D, R}, {T2, D, E, L}, {T3, E, F, R},
      {T1, F, B, R}, {T4, B, A, L}},
     true},
    // d: corridor around t3|t4
    {{{T4, A, B, L}, {T1, B, F, R}, {T3, F, A, L}, {T4, A, C, L},
      {T2, C, E, R}, {T3, E, A, L}},
     true},
    // e: corridor around t1|t4
    {{{T3, A, F, R}, {T1, F, B, L}, {T4, B, C, L}, {T2, C, D, R},
      {T1, D, B, L}, {T4, B, A, L}},
     true},
    // f: corridor around t2|t4
    {{{T3, A, E, R}, {T2, E, C, L}, {T4, C, B, L}, {T1, B, D, R},
      {T2, D, C, L}, {T4, C, A, L}},
     true},
}};

}  // namespace

const CurveDescriptor& edge_curve(Edge e) {
  validate_descriptor(kEdgeCurves[idx(e)]);
  return kEdgeCurves[idx(e)];
}

const CurveDescriptor& peripheral_curve(Vert v) {
  static const std::array<CurveDescriptor, kNumVerts> table = [] {
    std::array<CurveDescriptor, kNumVerts> t;
    for (Vert v : all_verts) {
      const auto& link = kModel.vertex_link[idx(v)];
      t[idx(v)].steps.assign(link.begin(), link.end());
      t[idx(v)].two_sided = true;
      validate_descriptor(t[idx(v)]);
    }
    return t;
  }();
  return table[idx(v)];
}

const CurveDescriptor& one_sided_square(Tri t) {
  // The 1-sided curve dual to a triangle crosses the three edges it does not
  // bound once each; the square doubles that corridor with the second pass
  // mirrored, alternating turns along the way.  Frozen from the one-time
  // search against the pair-product trace identities.
  static const std::array<CurveDescriptor, kNumTris> table = {{
      {{{T3, A, E, R}, {T2, E, C, L}, {T4, C, A, R},
        {T3, A, E, L}, {T2, E, C, R}, {T4, C, A, L}},
       true},
      {{{T3, A, F, R}, {T1, F, B, L}, {T4, B, A, R},
        {T3, A, F, L}, {T1, F, B, R}, {T4, B, A, L}},
       true},
      {{{T1, B, D, R}, {T2, D, C, L}, {T4, C, B, R},
        {T1, B, D, L}, {T2, D, C, R}, {T4, C, B, L}},
       true},
      {{{T1, D, F, R}, {T3, F, E, L}, {T2, E, D, R},
        {T1, D, F, L}, {T3, F, E, R}, {T2, E, D, L}},
       true},
  }};
  validate_descriptor(table[idx(t)]);
  return table[idx(t)];
}

Vert cusp_entry_vertex(int row) {
  static const Vert rows[3] = {V3, V2, V1};
  if (row < 0 || row > 2) throw DomainError("cusp row out of range");
  return rows[row];
}

bool is_reduced(const TreeAddress& addr) {
  for (std::size_t i = 0; i + 1 < addr.word.size(); ++i)
    if (addr.word[i] == addr.word[i + 1]) return false;
  for (auto w : addr.word)
    if (w > 3) return false;
  return true;
}

std::array<TreeAddress, 4> neighbors(const TreeAddress& addr) {
  if (!is_reduced(addr)) throw DomainError("address not reduced");
  std::array<TreeAddress, 4> out;
  for (std::uint8_t s = 0; s < 4; ++s) {
    TreeAddress next = addr;
    if (!next.word.empty() && next.word.back() == s)
      next.word.pop_back();  // switches are involutions
    else
      next.word.push_back(s);
    out[s] = std::move(next);
  }
  return out;
}

int tree_distance(const TreeAddress& u, const TreeAddress& w) {
  if (!is_reduced(u) || !is_reduced(w)) throw DomainError("address not reduced");
  std::size_t common = 0;
  while (common < u.word.size() && common < w.word.size() &&
         u.word[common] == w.word[common])
    ++common;
  return static_cast<int>(u.word.size() + w.word.size() - 2 * common);
}

std::string address_to_string(const TreeAddress& addr) {
  std::string out = "[";
  for (std::size_t i = 0; i < addr.word.size(); ++i) {
    if (i) out += ",";
    out += "S" + std::to_string(addr.word[i] + 1);
  }
  return out + "]";
}

}  // namespace charvar
