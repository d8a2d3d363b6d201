// charvar: coordinates, traces, switches and twist dynamics for
// type-preserving representations of the thrice-punctured projective plane.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
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

namespace {

constexpr const char* kVersion = "charvar 0.3.0 (schema 1)";

using charvar::json;

json load_json_arg(const std::string& arg) {
  // inline JSON or a path to a JSON file
  std::string text = arg;
  if (!arg.empty() && arg[0] != '[' && arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw charvar::DomainError("cannot open " + arg);
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  }
  return json::parse(text);
}

std::uint64_t seed_with_env(std::uint64_t seed) {
  if (const char* env = std::getenv("CHARVAR_SEED")) return std::strtoull(env, nullptr, 10);
  return seed;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw charvar::DomainError("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace charvar;
  CLI::App app{"type-preserving representation toolkit for the "
               "thrice-punctured projective plane"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ---- classify
  std::string coords_arg, signs_arg;
  auto* cmd_classify = app.add_subcommand(
      "classify", "Euler class, puncture signs and subregion of a chart");
  cmd_classify->add_option("--coords", coords_arg, "triangle coordinates JSON")
      ->required();
  cmd_classify->add_option("--signs", signs_arg, "triangle signs JSON")
      ->required();

  // ---- traces
  std::string traces_format = "json";
  auto* cmd_traces = app.add_subcommand(
      "traces", "traces of the six arc curves, kinds and cusp signs");
  cmd_traces->add_option("--coords", coords_arg)->required();
  cmd_traces->add_option("--signs", signs_arg)->required();
  cmd_traces->add_option("--format", traces_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // ---- switch
  std::string along = "t4";
  auto* cmd_switch =
      app.add_subcommand("switch", "triangle switch on a coordinate chart");
  cmd_switch->add_option("--coords", coords_arg)->required();
  cmd_switch->add_option("--signs", signs_arg)->required();
  cmd_switch->add_option("--along", along, "t1..t4")->required();

  // ---- sample
  int sample_euler = 0;
  std::string sample_signs;
  long sample_count = 1;
  std::uint64_t seed = 20240601;
  auto* cmd_sample =
      app.add_subcommand("sample", "draw charts from a census component");
  cmd_sample->add_option("--euler", sample_euler, "-1, 0 or 1")->required();
  cmd_sample->add_option("--signs", sample_signs, "puncture signs, e.g. +--")
      ->required();
  cmd_sample->add_option("--count", sample_count);
  cmd_sample->add_option("--seed", seed);

  // ---- reduce
  long max_steps = 1000;
  std::string diagnostics_path;
  auto* cmd_reduce =
      app.add_subcommand("reduce", "trace reduction to a non-hyperbolic witness");
  cmd_reduce->add_option("--coords", coords_arg)->required();
  cmd_reduce->add_option("--signs", signs_arg)->required();
  cmd_reduce->add_option("--max-steps", max_steps);
  cmd_reduce->add_option("--diagnostics", diagnostics_path,
                         "CSV path for the step diagnostics");

  // ---- scan
  int depth = 6;
  auto* cmd_scan = app.add_subcommand(
      "scan", "arc-curve traces over all balanced triangulations to a depth");
  cmd_scan->add_option("--coords", coords_arg)->required();
  cmd_scan->add_option("--signs", signs_arg)->required();
  cmd_scan->add_option("--depth", depth);

  // ---- walk
  auto* cmd_walk = app.add_subcommand(
      "walk", "admissibility quantities over the switch tree to a depth");
  cmd_walk->add_option("--coords", coords_arg)->required();
  cmd_walk->add_option("--signs", signs_arg)->required();
  cmd_walk->add_option("--depth", depth);

  // ---- orbit
  std::string space = "omega", start_arg, out_path = "-", twist = "ab";
  long steps = 1000;
  auto* cmd_orbit = app.add_subcommand("orbit", "twist orbits as CSV");
  cmd_orbit->add_option("--space", space, "omega or trace")
      ->check(CLI::IsMember({"omega", "trace"}));
  cmd_orbit->add_option("--start", start_arg, "start point JSON")->required();
  cmd_orbit->add_option("--steps", steps);
  cmd_orbit->add_option("--out", out_path, "output path, - for stdout");
  cmd_orbit->add_option("--twist", twist,
                        "trace-space twist: two of a,b,c,d");

  // ---- model
  auto* cmd_model = app.add_subcommand("model", "the canonical triangulation");

  // ---- verify
  std::string suite_name;
  long verify_count = 0;
  auto* cmd_verify =
      app.add_subcommand("verify", "run a named verification suite");
  cmd_verify->add_option("--suite", suite_name,
                         "suite name, or 'all' / omit to list");
  cmd_verify->add_option("--count", verify_count, "sample count override");
  cmd_verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*cmd_classify) {
      auto x = coords_from_json(load_json_arg(coords_arg));
      auto eps = signs_from_json(load_json_arg(signs_arg));
      std::cout << to_json(classify(x, eps)).dump() << "\n";
      return 0;
    }
    if (*cmd_traces) {
      auto x = coords_from_json(load_json_arg(coords_arg));
      auto eps = signs_from_json(load_json_arg(signs_arg));
      auto entries = cusp_entries(x, eps);
      if (traces_format == "csv") {
        std::cout << "edge,pair,abs_trace,kind\n";
        for (Edge e : all_edges) {
          auto d = dual_pair(e);
          auto h = edge_curve_trace(x, eps, e);
          std::cout << name(e) << "," << name(d[0]) << name(d[1]) << ","
                    << rat_to_string(h.abs_trace) << ","
                    << isom_kind_name(h.kind) << "\n";
        }
      } else {
        json rows = json::array();
        for (Edge e : all_edges) {
          auto d = dual_pair(e);
          auto h = edge_curve_trace(x, eps, e);
          rows.push_back(json{{"edge", name(e)},
                              {"pair", {name(d[0]), name(d[1])}},
                              {"holonomy", to_json(h)}});
        }
        json out{{"curves", rows},
                 {"cusp_signs", to_json(signs_at_cusps(x, eps))}};
        std::cout << out.dump() << "\n";
      }
      return 0;
    }
    if (*cmd_switch) {
      auto x = coords_from_json(load_json_arg(coords_arg));
      auto eps = signs_from_json(load_json_arg(signs_arg));
      Tri l = tri_from_name(along);
      json out;
      try {
        out = to_json(triangle_switch(x, eps, l));
      } catch (const Inadmissible& e) {
        out = json{{"admissible", false}, {"error", e.what()}};
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*cmd_sample) {
      std::mt19937_64 rng(seed_with_env(seed));
      auto want = cusp_signs_from_string(sample_signs);
      for (long n = 0; n < sample_count; ++n) {
        auto [x, eps] = sample_component(sample_euler, want, rng);
        json out{{"coords", to_json(x)},
                 {"signs", to_json(eps)},
                 {"label", to_json(classify(x, eps))}};
        std::cout << out.dump() << "\n";
      }
      return 0;
    }
    if (*cmd_reduce) {
      auto x = coords_from_json(load_json_arg(coords_arg));
      auto eps = signs_from_json(load_json_arg(signs_arg));
      auto [log, diag] = trace_reduce(x, eps, (int)max_steps);
      if (!diagnostics_path.empty()) {
        std::ostringstream csv;
        csv << "step,a,b,c,region,u,h,k\n";
        for (const auto& row : diag.rows) {
          csv << row.step << ",";
          if (diag.euler_zero)
            csv << ",,,," << rat_to_string(*row.u) << "," << row.h << ","
                << row.k << "\n";
          else
            csv << row.a << "," << row.b << "," << row.c << "," << row.region
                << ",,,\n";
        }
        write_output(diagnostics_path, csv.str());
      }
      std::cout << to_json(log).dump() << "\n";
      return 0;
    }
    if (*cmd_scan) {
      auto x = coords_from_json(load_json_arg(coords_arg));
      auto eps = signs_from_json(load_json_arg(signs_arg));
      std::cout << to_json(hyperbolicity_scan(x, eps, depth)).dump() << "\n";
      return 0;
    }
    if (*cmd_walk) {
      auto x = coords_from_json(load_json_arg(coords_arg));
      auto eps = signs_from_json(load_json_arg(signs_arg));
      std::cout << to_json(admissibility_walk(x, eps, depth)).dump() << "\n";
      return 0;
    }
    if (*cmd_orbit) {
      json start = load_json_arg(start_arg);
      std::ostringstream csv;
      if (space == "omega") {
        OmegaPoint<double> p{start.at("a").get<double>(),
                             start.at("c").get<double>(),
                             start.at("d").get<double>()};
        auto orbit = twist34_orbit(p, (int)steps);
        csv << "step,a,c,d,k\n";
        char buf[160];
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", i,
                        orbit[i].a, orbit[i].c, orbit[i].d,
                        ellipse_k(orbit[i]));
          csv << buf;
        }
      } else {
        TraceCoords<double> t{start.at("a").get<double>(),
                              start.at("b").get<double>(),
                              start.at("c").get<double>(),
                              start.at("d").get<double>(),
                              2, 2, 2};
        if (twist.size() != 2)
          throw DomainError("--twist needs two of a,b,c,d");
        csv << "step,a,b,c,d,x,y,z,residual\n";
        char buf[320];
        for (long i = 0; i <= steps; ++i) {
          std::snprintf(buf, sizeof buf,
                        "%ld,%.17g,%.17g,%.17g,%.17g,%g,%g,%g,%.17g\n", i, t.a,
                        t.b, t.c, t.d, t.x, t.y, t.z, relation_residual(t));
          csv << buf;
          t = vieta_flip(vieta_flip(t, twist[1]), twist[0]);
        }
      }
      write_output(out_path, csv.str());
      return 0;
    }
    if (*cmd_model) {
      std::cout << model_to_json().dump(2) << "\n";
      return 0;
    }
    if (*cmd_verify) {
      RunConfig cfg;
      cfg.seed = seed_with_env(seed);
      cfg.count = verify_count;
      if (suite_name.empty()) {
        for (const auto& n : suite_names()) std::cout << n << "\n";
        return 0;
      }
      std::vector<SuiteResult> results;
      if (suite_name == "all")
        results = run_all_suites(cfg);
      else
        results.push_back(run_suite(suite_name, cfg));
      bool all_passed = true;
      for (const auto& r : results) {
        json out{{"suite", r.name},
                 {"passed", r.passed},
                 {"detail", r.detail},
                 {"seconds", r.seconds}};
        std::cout << out.dump() << "\n";
        all_passed = all_passed && r.passed;
      }
      return all_passed ? 0 : 2;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
