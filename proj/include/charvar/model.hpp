#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

// The balanced triangulation of the thrice-punctured projective plane: three
// punctures, six arcs each joining two distinct punctures, four ideal
// triangles.  This is the fixed combinatorial chart; triangle switches move
// the coordinates, never the labels.
enum class Edge : std::uint8_t { a, b, c, d, e, f };
enum class Tri : std::uint8_t { t1, t2, t3, t4 };
enum class Vert : std::uint8_t { v1, v2, v3 };

inline constexpr int kNumEdges = 6;
inline constexpr int kNumTris = 4;
inline constexpr int kNumVerts = 3;

inline constexpr int idx(Edge e) { return static_cast<int>(e); }
inline constexpr int idx(Tri t) { return static_cast<int>(t); }
inline constexpr int idx(Vert v) { return static_cast<int>(v); }

inline constexpr std::array<Edge, 6> all_edges{Edge::a, Edge::b, Edge::c,
                                               Edge::d, Edge::e, Edge::f};
inline constexpr std::array<Tri, 4> all_tris{Tri::t1, Tri::t2, Tri::t3,
                                             Tri::t4};
inline constexpr std::array<Vert, 3> all_verts{Vert::v1, Vert::v2, Vert::v3};

std::string name(Edge e);
std::string name(Tri t);
std::string name(Vert v);
Edge edge_from_name(const std::string& s);
Tri tri_from_name(const std::string& s);
Vert vert_from_name(const std::string& s);

enum class Turn : std::uint8_t { Left, Right };

// One transverse pass of a closed curve through a triangle, entering and
// leaving by distinct edges.
struct CurveStep {
  Tri tri;
  Edge enter;
  Edge exit;
  Turn turn;
};

// A closed curve in standard position: cyclic step list, exit edge of step k
// equal to the enter edge of step k+1.
struct CurveDescriptor {
  std::vector<CurveStep> steps;
  bool two_sided = true;
};

// Throws BadStep if a step's edges do not bound its triangle or the cyclic
// chaining is broken.
void validate_descriptor(const CurveDescriptor& desc);

struct EdgeInfo {
  std::array<Vert, 2> ends;  // punctures joined by the arc
  std::array<Tri, 2> dual;   // the two triangles containing it
};

struct TriangulationModel {
  std::array<std::array<Edge, 3>, kNumTris> tri_edges;
  std::array<EdgeInfo, kNumEdges> edges;
  // Corner cycle around each puncture: 4 steps, one corner per triangle.
  std::array<std::array<CurveStep, 4>, kNumVerts> vertex_link;
};

const TriangulationModel& canonical_model();

bool tri_has_edge(Tri t, Edge e);
Edge third_edge(Tri t, Edge e1, Edge e2);
// The edge shared by the two given triangles.
Edge dual_edge(Tri t1, Tri t2);
// The complementary pair: the two triangles NOT containing the edge.
std::array<Tri, 2> complement_pair(Edge e);
std::array<Tri, 2> dual_pair(Edge e);
std::array<Vert, 2> edge_ends(Edge e);

// S4 acts on the model by permuting triangle labels; edges follow their dual
// pairs and punctures follow the Klein-quotient action.  perm maps old index
// to new index.
struct TriPermutation {
  std::array<int, 4> perm;
  Tri operator()(Tri t) const { return static_cast<Tri>(perm[idx(t)]); }
  Edge operator()(Edge e) const;
  Vert operator()(Vert v) const;
};
// A permutation sending `from` to `to` (a transposition unless equal).
TriPermutation tri_swap(Tri from, Tri to);

// 2-sided simple closed curve associated to an arc: encircles the two
// punctures the arc joins.  Six steps; the crossed-edge multiset equals the
// edge set of the two triangles not containing the arc.
const CurveDescriptor& edge_curve(Edge e);

// Loop around a puncture, cutting the 4 corners of its link.
const CurveDescriptor& peripheral_curve(Vert v);

// Square of the 1-sided curve dual to a triangle (the curve disjoint from
// it); the square is 2-sided and crosses the other three triangles twice.
const CurveDescriptor& one_sided_square(Tri t);

// Which puncture's peripheral holonomy realizes row i of the cusp-entry
// formulas in coords.hpp.  The printed row order of the source formulas and
// the combinatorial vertex labels differ by the (v1 v3) transposition; see
// README notes on conventions.
Vert cusp_entry_vertex(int row);

// Reduced words over the four triangle switches; the balanced-triangulation
// graph is the 4-regular tree, so reduced words are vertices.
struct TreeAddress {
  std::vector<std::uint8_t> word;  // letters 0..3, no two consecutive equal

  bool operator==(const TreeAddress& o) const { return word == o.word; }
};

bool is_reduced(const TreeAddress& addr);
std::array<TreeAddress, 4> neighbors(const TreeAddress& addr);
int tree_distance(const TreeAddress& u, const TreeAddress& w);
std::string address_to_string(const TreeAddress& addr);

}  // namespace charvar
