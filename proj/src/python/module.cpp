// Python bindings: the main operations, with exact rationals crossing the
// boundary as "p/q" strings and structured results as plain dicts/lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "charvar/coords.hpp"
#include "charvar/json_io.hpp"
#include "charvar/model.hpp"
#include "charvar/omega.hpp"
#include "charvar/reduction.hpp"
#include "charvar/switches.hpp"
#include "charvar/trace_variety.hpp"
#include "charvar/traces.hpp"
#include "charvar/verify.hpp"

namespace py = pybind11;
using namespace charvar;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    json out = json::array();
    for (const auto& item : obj) out.push_back(py_to_json(item));
    return out;
  }
  if (py::isinstance<py::dict>(obj)) {
    json out = json::object();
    for (auto item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  throw DomainError("unsupported python value");
}

Coords4<Rat> coords_arg(const py::object& obj) {
  return coords_from_json(py_to_json(obj));
}

SignVector signs_arg(const py::object& obj) {
  return signs_from_json(py_to_json(obj));
}

EdgeLengths<Rat> lambda_arg(const py::object& obj) {
  json j = py_to_json(obj);
  if (!j.is_array() || j.size() != 6)
    throw DomainError("lambda-lengths must be an array of 6 entries (a..f)");
  EdgeLengths<Rat> out;
  for (int i = 0; i < 6; ++i) out[i] = rat_from_json(j[i]);
  return out;
}

TraceCoords<double> trace_coords_arg(const py::object& obj) {
  json j = py_to_json(obj);
  auto get = [&](const char* key, double fallback) {
    return j.contains(key) ? j[key].get<double>() : fallback;
  };
  return {j.at("a").get<double>(), j.at("b").get<double>(),
          j.at("c").get<double>(), j.at("d").get<double>(),
          get("x", 2), get("y", 2), get("z", 2)};
}

py::dict trace_coords_out(const TraceCoords<double>& t) {
  py::dict out;
  out["a"] = t.a;
  out["b"] = t.b;
  out["c"] = t.c;
  out["d"] = t.d;
  out["x"] = t.x;
  out["y"] = t.y;
  out["z"] = t.z;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "coordinates, traces, switches and twist dynamics for type-preserving "
      "representations of the thrice-punctured projective plane";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("model", [] { return json_to_py(model_to_json()); },
        "the canonical balanced triangulation");

  m.def(
      "triangle_coords",
      [](const py::object& lam) {
        return json_to_py(to_json(triangle_coords(lambda_arg(lam))));
      },
      py::arg("lambdas"));

  m.def(
      "section",
      [](const py::object& coords) {
        auto x = coords_double_from_json(py_to_json(coords));
        auto lam = section(x);
        py::list out;
        for (double v : lam) out.append(v);
        return out;
      },
      py::arg("coords"));

  m.def(
      "euler_class",
      [](const py::object& signs) { return euler_class(signs_arg(signs)); },
      py::arg("signs"));

  m.def(
      "classify",
      [](const py::object& coords, const py::object& signs) {
        return json_to_py(to_json(classify(coords_arg(coords),
                                           signs_arg(signs))));
      },
      py::arg("coords"), py::arg("signs"));

  m.def(
      "cusp_signs",
      [](const py::object& coords, const py::object& signs) {
        auto s = signs_at_cusps(coords_arg(coords), signs_arg(signs));
        return py::make_tuple(s[0], s[1], s[2]);
      },
      py::arg("coords"), py::arg("signs"));

  m.def(
      "gti_satisfied",
      [](const py::object& coords) {
        return gti_satisfied(coords_arg(coords));
      },
      py::arg("coords"));

  m.def(
      "edge_traces",
      [](const py::object& coords, const py::object& signs) {
        auto x = coords_arg(coords);
        auto eps = signs_arg(signs);
        py::list out;
        for (Edge e : all_edges) {
          auto h = edge_curve_trace(x, eps, e);
          py::dict row;
          row["edge"] = name(e);
          row["abs_trace"] = rat_to_string(h.abs_trace);
          row["kind"] = isom_kind_name(h.kind);
          out.append(row);
        }
        return out;
      },
      py::arg("coords"), py::arg("signs"));

  m.def(
      "curve_trace",
      [](const py::object& descriptor, const py::object& lambdas,
         const py::object& signs) {
        json dj = py_to_json(descriptor);
        CurveDescriptor desc;
        desc.two_sided = dj.value("two_sided", true);
        for (const auto& step : dj.at("steps"))
          desc.steps.push_back(
              {tri_from_name(step.at("triangle").get<std::string>()),
               edge_from_name(step.at("enter").get<std::string>()),
               edge_from_name(step.at("exit").get<std::string>()),
               step.at("turn").get<std::string>() == "R" ? Turn::Right
                                                         : Turn::Left});
        auto h = curve_trace(desc, lambda_arg(lambdas), signs_arg(signs));
        return json_to_py(to_json(h));
      },
      py::arg("descriptor"), py::arg("lambdas"), py::arg("signs"));

  m.def(
      "edge_curve",
      [](const std::string& edge) {
        return json_to_py(to_json(edge_curve(edge_from_name(edge))));
      },
      py::arg("edge"));

  m.def(
      "peripheral_curve",
      [](const std::string& vertex) {
        return json_to_py(to_json(peripheral_curve(vert_from_name(vertex))));
      },
      py::arg("vertex"));

  m.def(
      "switch",
      [](const py::object& coords, const py::object& signs,
         const std::string& along) {
        return json_to_py(to_json(triangle_switch(
            coords_arg(coords), signs_arg(signs), tri_from_name(along))));
      },
      py::arg("coords"), py::arg("signs"), py::arg("along"));

  m.def(
      "switch_via_flips",
      [](const py::object& lambdas, const py::object& signs,
         const std::string& along) {
        auto [lam, eps] = switch_via_flips(
            lambda_arg(lambdas), signs_arg(signs), tri_from_name(along));
        py::dict out;
        out["lambdas"] = json_to_py(to_json(lam));
        out["signs"] = json_to_py(to_json(eps));
        return out;
      },
      py::arg("lambdas"), py::arg("signs"), py::arg("along"));

  m.def(
      "trace_reduce",
      [](const py::object& coords, const py::object& signs, int max_steps) {
        auto [log, diag] =
            trace_reduce(coords_arg(coords), signs_arg(signs), max_steps);
        return json_to_py(to_json(log));
      },
      py::arg("coords"), py::arg("signs"), py::arg("max_steps") = 1000);

  m.def(
      "sample",
      [](int euler, const std::string& signs, long count,
         std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        auto want = cusp_signs_from_string(signs);
        py::list out;
        for (long n = 0; n < count; ++n) {
          auto [x, eps] = sample_component(euler, want, rng);
          py::dict row;
          row["coords"] = json_to_py(to_json(x));
          row["signs"] = json_to_py(to_json(eps));
          out.append(row);
        }
        return out;
      },
      py::arg("euler"), py::arg("signs"), py::arg("count") = 1,
      py::arg("seed") = 20240601);

  m.def(
      "hyperbolicity_scan",
      [](const py::object& coords, const py::object& signs, int depth) {
        return json_to_py(to_json(
            hyperbolicity_scan(coords_arg(coords), signs_arg(signs), depth)));
      },
      py::arg("coords"), py::arg("signs"), py::arg("depth") = 4);

  m.def(
      "admissibility_walk",
      [](const py::object& coords, const py::object& signs, int depth) {
        return json_to_py(to_json(
            admissibility_walk(coords_arg(coords), signs_arg(signs), depth)));
      },
      py::arg("coords"), py::arg("signs"), py::arg("depth") = 4);

  m.def(
      "omega_orbit",
      [](double a, double c, double d, int steps) {
        auto orbit = twist34_orbit(OmegaPoint<double>{a, c, d}, steps);
        py::list out;
        for (const auto& p : orbit)
          out.append(py::make_tuple(p.a, p.c, p.d, ellipse_k(p)));
        return out;
      },
      py::arg("a"), py::arg("c"), py::arg("d"), py::arg("steps") = 100);

  m.def(
      "rotation_number",
      [](double a, double c, double d, int steps) {
        return rotation_number_estimate(
            twist34_orbit(OmegaPoint<double>{a, c, d}, steps));
      },
      py::arg("a"), py::arg("c"), py::arg("d"), py::arg("steps") = 10000);

  m.def(
      "relation_residual",
      [](const py::object& t) {
        return relation_residual(trace_coords_arg(t));
      },
      py::arg("coords"));

  m.def(
      "vieta_flip",
      [](const py::object& t, const std::string& var) {
        if (var.size() != 1) throw DomainError("var must be one of a,b,c,d");
        return trace_coords_out(vieta_flip(trace_coords_arg(t), var[0]));
      },
      py::arg("coords"), py::arg("var"));

  m.def(
      "central_character",
      [](const py::object& t, const std::string& generator) {
        if (generator.size() != 1)
          throw DomainError("generator must be one of a,b,c,d");
        return trace_coords_out(
            central_character(trace_coords_arg(t), generator[0]));
      },
      py::arg("coords"), py::arg("generator"));

  m.def(
      "solve_d",
      [](double a, double b, double c, int branch) {
        return trace_coords_out(solve_d(a, b, c, branch));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("branch") = 0);

  m.def(
      "run_suite",
      [](const std::string& name, long count, std::uint64_t seed) {
        RunConfig cfg;
        cfg.count = count;
        cfg.seed = seed;
        auto result = run_suite(name, cfg);
        py::dict out;
        out["suite"] = result.name;
        out["passed"] = result.passed;
        out["detail"] = result.detail;
        out["seconds"] = result.seconds;
        return out;
      },
      py::arg("name"), py::arg("count") = 0, py::arg("seed") = 20240601);

  m.def("suite_names", [] {
    py::list out;
    for (const auto& n : suite_names()) out.append(n);
    return out;
  });
}
