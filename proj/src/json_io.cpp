#include "charvar/json_io.hpp"

namespace charvar {

json to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_number_float()) {
    // decimal via string round-trip keeps the value the user typed
    return rat_from_string(j.dump());
  }
  throw DomainError("expected a rational literal, got " + j.dump());
}

json to_json(const Coords4<Rat>& x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(to_json(v));
  return out;
}

json to_json(const Coords4<double>& x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(v);
  return out;
}

Coords4<Rat> coords_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw DomainError("coordinates must be an array of 4 entries");
  Coords4<Rat> x;
  for (int i = 0; i < 4; ++i) x[i] = rat_from_json(j[i]);
  return x;
}

Coords4<double> coords_double_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw DomainError("coordinates must be an array of 4 entries");
  Coords4<double> x;
  for (int i = 0; i < 4; ++i)
    x[i] = j[i].is_string() ? rat_from_string(j[i].get<std::string>()).get_d()
                            : j[i].get<double>();
  return x;
}

json to_json(const SignVector& eps) {
  json out = json::array();
  for (int v : eps.val) out.push_back(v);
  return out;
}

SignVector signs_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw DomainError("triangle signs must be an array of 4 entries of +-1");
  SignVector eps;
  for (int i = 0; i < 4; ++i) {
    int v = j[i].get<int>();
    if (v != 1 && v != -1) throw DomainError("triangle signs must be +-1");
    eps.val[i] = v;
  }
  return eps;
}

std::array<int, 3> cusp_signs_from_string(const std::string& s) {
  std::array<int, 3> out{};
  if (s.size() != 3) throw DomainError("puncture signs must be 3 of +-");
  for (int i = 0; i < 3; ++i) {
    if (s[i] == '+')
      out[i] = 1;
    else if (s[i] == '-')
      out[i] = -1;
    else
      throw DomainError("puncture signs must be 3 of +-");
  }
  return out;
}

json to_json(const std::array<int, 3>& signs) {
  return json::array({signs[0], signs[1], signs[2]});
}

json to_json(const ComponentLabel& label) {
  json out;
  out["euler"] = label.euler;
  out["signs"] = to_json(label.signs);
  if (!label.subregion.empty()) out["subregion"] = label.subregion;
  return out;
}

json to_json(const CurveStep& step) {
  return json{{"triangle", name(step.tri)},
              {"enter", name(step.enter)},
              {"exit", name(step.exit)},
              {"turn", step.turn == Turn::Left ? "L" : "R"}};
}

json to_json(const CurveDescriptor& desc) {
  json steps = json::array();
  for (const auto& s : desc.steps) steps.push_back(to_json(s));
  return json{{"steps", steps}, {"two_sided", desc.two_sided}};
}

json model_to_json() {
  const auto& m = canonical_model();
  json tris;
  for (Tri t : all_tris) {
    json edges = json::array();
    for (Edge e : m.tri_edges[idx(t)]) edges.push_back(name(e));
    tris[name(t)] = edges;
  }
  json edges;
  for (Edge e : all_edges) {
    const auto& info = m.edges[idx(e)];
    edges[name(e)] = json{
        {"ends", {name(info.ends[0]), name(info.ends[1])}},
        {"dual", {name(info.dual[0]), name(info.dual[1])}}};
  }
  json links;
  for (Vert v : all_verts) {
    json cycle = json::array();
    for (const auto& s : m.vertex_link[idx(v)]) cycle.push_back(to_json(s));
    links[name(v)] = cycle;
  }
  return json{{"triangles", tris}, {"edges", edges}, {"vertex_links", links}};
}

template <typename S>
static json holonomy_json(const Holonomy<S>& h) {
  json out;
  if constexpr (scalar_traits<S>::exact)
    out["abs_trace"] = to_json(h.abs_trace);
  else
    out["abs_trace"] = h.abs_trace;
  out["kind"] = isom_kind_name(h.kind);
  if (h.parabolic_sign) out["parabolic_sign"] = *h.parabolic_sign;
  return out;
}

json to_json(const Holonomy<Rat>& h) { return holonomy_json(h); }
json to_json(const Holonomy<double>& h) { return holonomy_json(h); }

json to_json(const SwitchResult<Rat>& r) {
  return json{{"coords", to_json(r.coords)},
              {"signs", to_json(r.signs)},
              {"admissible", r.admissible}};
}

json to_json(const EdgeLengths<Rat>& lambda) {
  json out;
  for (Edge e : all_edges) out[name(e)] = to_json(lambda[idx(e)]);
  return out;
}

json to_json(const TreeAddress& addr) {
  json out = json::array();
  for (auto w : addr.word) out.push_back("S" + std::to_string(w + 1));
  return out;
}

json to_json(const ReductionLog& log) {
  json steps = json::array();
  for (const auto& s : log.steps) {
    json step{{"address", to_json(s.address)},
              {"coords", to_json(s.coords)},
              {"signs", to_json(s.signs)}};
    if (s.switched >= 0) step["switched"] = "t" + std::to_string(s.switched + 1);
    steps.push_back(step);
  }
  json out{{"outcome", outcome_name(log.outcome)}, {"steps", steps}};
  if (log.witness) {
    out["witness"] = json{
        {"pair", {log.witness->pair_i + 1, log.witness->pair_j + 1}},
        {"edge",
         name(dual_edge(static_cast<Tri>(log.witness->pair_i),
                        static_cast<Tri>(log.witness->pair_j)))},
        {"holonomy", to_json(log.witness->holonomy)},
        {"address", to_json(log.witness->address)}};
  }
  if (log.inadmissible_edge) out["inadmissible_edge"] = *log.inadmissible_edge;
  return out;
}

json to_json(const WalkReport& report) {
  json zeros = json::array();
  for (const auto& z : report.zeros)
    zeros.push_back(json{{"address", to_json(z.address)},
                         {"quantity", z.quantity}});
  return json{{"charts_visited", report.charts_visited}, {"zeros", zeros}};
}

json to_json(const ScanReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.non_hyperbolic) {
    json entry{{"address", to_json(w.address)},
               {"holonomy", to_json(w.holonomy)}};
    if (w.pair_i >= 0) entry["pair"] = {w.pair_i + 1, w.pair_j + 1};
    witnesses.push_back(entry);
  }
  return json{{"charts_visited", report.charts_visited},
              {"min_trace", to_json(report.min_trace)},
              {"min_address", to_json(report.min_address)},
              {"non_hyperbolic", witnesses}};
}

json to_json(const SeparationReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs)
    pairs.push_back(json{{"pair", {p.pair_i + 1, p.pair_j + 1}},
                         {"same_sign", p.same_sign},
                         {"holonomy", to_json(p.holonomy)}});
  return json{{"pairs", pairs},
              {"opposite_all_hyperbolic", report.opposite_all_hyperbolic},
              {"non_hyperbolic_same_sign", report.non_hyperbolic_same_sign}};
}

}  // namespace charvar
