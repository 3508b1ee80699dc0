// majorlab command-line runner: execute inequality suites, log-convexity
// probes, and counterexample searches with reproducible seeds, and persist
// the reports.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "majorlab/runner.hpp"
#include "majorlab/search.hpp"
#include "majorlab/version.hpp"

namespace {

uint64_t default_seed() {
  const char* env = std::getenv("MAJORLAB_SEED");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return end == env ? 0 : static_cast<uint64_t>(v);
}

void print_registry() {
  std::printf("checks:\n");
  for (const auto& id : majorlab::registry_ids()) std::printf("  %s\n", id.c_str());
  std::printf("suites:\n");
  for (const auto& id : majorlab::suite_ids()) std::printf("  %s\n", id.c_str());
  std::printf("objectives:\n");
  for (const auto& id : majorlab::objective_ids()) std::printf("  %s\n", id.c_str());
  std::printf("probe variants:\n");
  for (const char* id : {"twovar", "section_t1", "section_p1", "powerp", "congruence"})
    std::printf("  %s\n", id);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majorlab: randomized verification of matrix norm and majorization inequalities"};
  app.set_version_flag("--version", majorlab::kArtifactVersion);

  std::string suite, check, objective, probe;
  bool list = false, demo = false;
  majorlab::RunConfig cfg;
  cfg.seed = default_seed();
  std::string out_path;

  app.add_option("--suite", suite, "run every check in a suite");
  app.add_option("--check", check, "run one registry check");
  app.add_option("--objective", objective, "hill-climbing search over one objective");
  app.add_option("--probe", probe, "log-convexity probe of a functional variant");
  app.add_flag("--list", list, "list registry, suite, and objective ids");
  app.add_flag("--demo", demo, "run the closed-form showcase");
  app.add_option("--dim", cfg.dims, "matrix dimensions to draw from")
      ->expected(-1);
  app.add_option("--trials", cfg.trials, "trials per check");
  app.add_option("--seed", cfg.seed, "random seed (default: MAJORLAB_SEED or 0)");
  app.add_option("--tol", cfg.tol, "margin tolerance");
  app.add_option("--grid", cfg.grid, "probe grid, e.g. \"p:1,1.5,2;t:0,0.5,1\"");
  app.add_option("--out", out_path, "write the report here");
  app.add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads across trials");
  app.add_option("--restarts", cfg.restarts, "search restarts");
  app.add_option("--steps", cfg.steps, "search steps per restart");
  app.add_option("--alpha", cfg.alpha, "functional exponent alpha (probe)");
  app.add_option("--norm", cfg.norm, "norm id for probes, e.g. operator, kyfan:2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (list) {
    print_registry();
    return 0;
  }

  int modes = 0;
  if (!suite.empty()) ++modes;
  if (!check.empty()) ++modes;
  if (!objective.empty()) ++modes;
  if (!probe.empty()) ++modes;
  if (demo) ++modes;
  if (modes != 1) {
    std::fprintf(stderr, "exactly one of --suite/--check/--objective/--probe/--demo required\n");
    return 1;
  }

  if (!suite.empty()) {
    cfg.command = "suite";
    cfg.target = suite;
  } else if (!check.empty()) {
    cfg.command = "check";
    cfg.target = check;
  } else if (!objective.empty()) {
    cfg.command = "search";
    cfg.target = objective;
  } else if (!probe.empty()) {
    cfg.command = "probe";
    cfg.target = probe;
  } else {
    cfg.command = "demo";
  }

  try {
    const majorlab::RunResult result = majorlab::execute(cfg);
    for (const auto& line : result.console) std::printf("%s\n", line.c_str());
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::fprintf(stderr, "cannot open output file '%s'\n", out_path.c_str());
        return 1;
      }
      out << (cfg.format == "csv" && !result.report_csv.empty() ? result.report_csv
                                                                : result.report_json);
    }
    return result.exit_code;
  } catch (const majorlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
