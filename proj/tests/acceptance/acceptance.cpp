// Acceptance driver: one PASS/FAIL line per primary criterion.
//
//   sfpoly_acceptance [path/to/sfpoly]
//
// Criterion 10 runs the command line tool twice and needs its path.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "sfpoly/verify.hpp"

using namespace sfpoly;

namespace {

struct Outcome {
  verify::CheckResult result;
  double seconds = 0;
};

Outcome timed(const std::function<verify::CheckResult()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o.result = run();
  } catch (const std::exception& e) {
    o.result.passed = false;
    o.result.detail = std::string("error: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

struct Captured {
  std::string output;
  int status = -1;
};

Captured run_command(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) c.output.append(buf, n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

verify::CheckResult cli_determinism(const std::optional<std::string>& cli) {
  verify::CheckResult r{"10", "CLI verify is deterministic", false, ""};
  if (!cli) {
    r.detail = "no CLI path given";
    return r;
  }
  const std::string cmd = "'" + *cli + "' verify 2>&1";
  const Captured first = run_command(cmd);
  const Captured second = run_command(cmd);
  r.passed = first.status == 0 && second.status == 0 && first.output == second.output &&
             !first.output.empty();
  r.detail = "exit codes " + std::to_string(first.status) + "/" + std::to_string(second.status) +
             ", " + std::to_string(first.output.size()) + " bytes, " +
             (first.output == second.output ? "identical" : "different");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::optional<std::string> cli = argc > 1 ? std::optional<std::string>(argv[1]) : std::nullopt;
  const verify::SuiteOptions opt;

  struct Criterion {
    std::function<verify::CheckResult()> run;
    double limit;  // seconds; 0 = none
  };
  const Criterion criteria[] = {
      {[] { return verify::pyramid_reproduction(); }, 1},
      {[] { return verify::pyramid_duality_bridge(); }, 0},
      {[&] { return verify::pyramid_fan_axioms(opt.fan); }, 5},
      {[&] { return verify::translation_invariance(opt.seed); }, 0},
      {[&] { return verify::seminorm_axioms(opt.seed); }, 5},
      {[&] { return verify::hull_oracle_equivalence(opt.seed); }, 30},
      {[&] { return verify::membership_coherence(opt.seed); }, 0},
      {[&] { return verify::fox_calculus(opt.seed); }, 2},
      {[&] { return verify::pretzel_consistency(opt.fan); }, 0},
      {[&] { return cli_determinism(cli); }, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const Outcome o = timed(c.run);
    const bool in_time = c.limit == 0 || o.seconds < c.limit;
    const bool ok = o.result.passed && in_time;
    if (!ok) ++failed;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3fs", o.seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << o.result.id << ": " << o.result.title
              << " [" << secs;
    if (c.limit > 0) std::cout << " / limit " << c.limit << "s";
    std::cout << "] " << o.result.detail << (in_time ? "" : " (time limit exceeded)") << "\n";
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED")
            << "\n";
  return failed == 0 ? 0 : 1;
}
