// Acceptance suite: one pass/fail line per criterion, pinned counts and
// tolerances, exact arithmetic wherever the quantities are rational.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "charvar/json_io.hpp"
#include "charvar/verify.hpp"

namespace {

int failures = 0;

void report(int index, const std::string& name, bool passed,
            const std::string& detail, double seconds) {
  std::printf("[%s] C%-2d %-24s %s (%.1fs)\n", passed ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!passed) ++failures;
}

void run(int index, const std::string& display, const std::string& suite,
         const charvar::RunConfig& cfg) {
  auto result = charvar::run_suite(suite, cfg);
  report(index, display, result.passed, result.detail, result.seconds);
}

std::string run_cli(const std::string& cli, const std::string& args,
                    int* exit_code) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string output;
  if (!pipe) {
    *exit_code = -1;
    return output;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  *exit_code = WEXITSTATUS(pclose(pipe));
  return output;
}

void criterion_determinism() {
  auto start = std::chrono::steady_clock::now();
  const char* cli = std::getenv("CHARVAR_CLI");
  std::ostringstream detail;
  bool passed = true;
  if (!cli || !*cli) {
    report(10, "determinism-schema", false,
           "CHARVAR_CLI not set; cannot drive the binary", 0);
    return;
  }
  int code1 = 0, code2 = 0;
  // documented example: classification output, byte for byte
  std::string classified = run_cli(
      cli, "classify --coords '[1,1,1,2]' --signs '[-1,-1,1,1]'", &code1);
  if (code1 != 0 || classified != "{\"euler\":0,\"signs\":[1,-1,-1]}\n") {
    passed = false;
    detail << "classify example mismatch; ";
  }
  // empty component: domain error, exit 1
  run_cli(cli, "sample --euler 0 --signs '+++' --seed 5", &code1);
  if (code1 != 1) {
    passed = false;
    detail << "empty component exit code " << code1 << "; ";
  }
  // equal seeds give byte-identical streams
  std::string s1 = run_cli(
      cli, "sample --euler 1 --signs '+++' --count 12 --seed 99", &code1);
  std::string s2 = run_cli(
      cli, "sample --euler 1 --signs '+++' --count 12 --seed 99", &code2);
  if (code1 != 0 || code2 != 0 || s1.empty() || s1 != s2) {
    passed = false;
    detail << "seeded sampling not reproducible; ";
  }
  // the seed environment override changes the stream
  std::string s3 = run_cli(
      cli,
      "sample --euler 1 --signs '+++' --count 12 --seed 99",
      &code1);
  setenv("CHARVAR_SEED", "7", 1);
  std::string s4 = run_cli(
      cli, "sample --euler 1 --signs '+++' --count 12 --seed 99", &code2);
  unsetenv("CHARVAR_SEED");
  if (s3 == s4) {
    passed = false;
    detail << "CHARVAR_SEED override ignored; ";
  }
  // exact mode prints rationals
  std::string reduced = run_cli(
      cli, "reduce --coords '[1,1,1,4]' --signs '[1,1,1,-1]'", &code1);
  if (code1 != 0 || reduced.find("1/4") == std::string::npos) {
    passed = false;
    detail << "reduce output missing exact rationals; ";
  }
  std::string sw1 = run_cli(
      cli, "switch --along t4 --coords '[1,1,1,2]' --signs '[-1,-1,1,1]'",
      &code1);
  std::string sw2 = run_cli(
      cli, "switch --along t4 --coords '[1,1,1,2]' --signs '[-1,-1,1,1]'",
      &code2);
  if (code1 != 0 || sw1 != sw2 || sw1.find("\"admissible\":true") ==
                                      std::string::npos) {
    passed = false;
    detail << "switch output unstable; ";
  }
  // orbit CSV determinism
  std::string o1 = run_cli(
      cli,
      "orbit --space omega --start '{\"a\":0.3,\"c\":0.4,\"d\":0.4}' --steps 200",
      &code1);
  std::string o2 = run_cli(
      cli,
      "orbit --space omega --start '{\"a\":0.3,\"c\":0.4,\"d\":0.4}' --steps 200",
      &code2);
  if (code1 != 0 || o1 != o2 || o1.find("step,a,c,d,k") == std::string::npos) {
    passed = false;
    detail << "orbit CSV unstable; ";
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  report(10, "determinism-schema", passed,
         passed ? "CLI examples reproduce byte-for-byte" : detail.str(), secs);
}

}  // namespace

int main() {
  charvar::RunConfig cfg;
  cfg.seed = 20240601;

  run(1, "component-census", "components", cfg);
  run(2, "switch-involution", "switch-involution", cfg);
  run(3, "flip-oracle-agreement", "invariance", cfg);
  run(4, "gti-equivalence", "gti-equivalence", cfg);
  run(5, "reduction-termination", "reduction-termination", cfg);
  run(6, "hyperbolicity-components", "hyperbolicity-scan", cfg);
  run(7, "e0-dichotomy", "e0-dichotomy", cfg);
  run(8, "domination", "domination", cfg);
  run(9, "dynamics-invariants", "omega-dynamics", cfg);
  {
    // criterion 9 also covers the trace-coordinate variety
    auto result = charvar::run_suite("trace-variety", cfg);
    report(9, "trace-variety", result.passed, result.detail, result.seconds);
  }
  criterion_determinism();

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
