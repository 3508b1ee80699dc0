#include "majorlab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "majorlab/version.hpp"

namespace majorlab {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<CheckOutcome> run_trials_parallel(const std::string& check_id,
                                              const SweepParams& params, int trials,
                                              uint64_t seed, double tol, int jobs) {
  std::vector<CheckOutcome> out(trials);
  if (jobs <= 1) {
    for (int t = 0; t < trials; ++t)
      out[t] = run_check(check_id, gen_instance(check_id, seed, t, params), tol);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w]() {
      for (int t = w; t < trials; t += jobs)
        out[t] = run_check(check_id, gen_instance(check_id, seed, t, params), tol);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

Json summarize(const std::vector<CheckOutcome>& outcomes) {
  int passed = 0, failed = 0, expected = 0;
  double worst = 0.0;
  bool first = true;
  for (const auto& o : outcomes) {
    if (o.verdict) {
      ++passed;
    } else if (o.expects_violation) {
      ++expected;
    } else {
      ++failed;
    }
    if (first || o.margin < worst) worst = o.margin;
    first = false;
  }
  Json s;
  s["total"] = outcomes.size();
  s["passed"] = passed;
  s["genuine_failures"] = failed;
  s["expected_violations"] = expected;
  s["worst_margin"] = json_safe(worst);
  return s;
}

std::string render_csv(const std::vector<CheckOutcome>& outcomes) {
  std::string csv = "check_id,seed,n,verdict,expects_violation,margin,margin_n\n";
  for (const auto& o : outcomes) {
    csv += o.check_id + "," + std::to_string(o.seed) + "," + std::to_string(o.n) + "," +
           (o.verdict ? "true" : "false") + "," + (o.expects_violation ? "true" : "false") + "," +
           fmt_double(json_safe(o.margin)) + "," +
           (o.margin_n ? fmt_double(json_safe(*o.margin_n)) : "") + "\n";
  }
  return csv;
}

FunctionalSpec probe_spec_from_seed(const RunConfig& cfg, Variant variant) {
  RandomStream rs = RandomStream(cfg.seed).substream("probe");
  const int n = cfg.dims.empty() ? 3 : cfg.dims.front();
  PsdMatrix a = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  PsdMatrix b = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  ComplexMatrix z = gen_general(rs, n);
  return FunctionalSpec{std::move(a), std::move(b), std::move(z), cfg.alpha,
                        SymmetricNorm::parse(cfg.norm), variant};
}

ProbeGrid default_grid_for(Variant variant) {
  switch (variant) {
    case Variant::SectionT1:
    case Variant::PowerP:
      return uniform_grid(0.5, 4.0, 5, 1.0, 1.0, 1);
    case Variant::SectionP1:
      return uniform_grid(1.0, 1.0, 1, -1.0, 2.0, 5);
    default:
      return uniform_grid(0.5, 4.0, 5, -1.0, 2.0, 5);
  }
}

}  // namespace

Json to_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["target"] = cfg.target;
  j["dims"] = cfg.dims;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["grid"] = cfg.grid;
  j["format"] = cfg.format;
  j["jobs"] = cfg.jobs;
  j["restarts"] = cfg.restarts;
  j["steps"] = cfg.steps;
  j["alpha"] = cfg.alpha;
  j["norm"] = cfg.norm;
  return j;
}

RunConfig config_from_json(const Json& j) {
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.target = j.at("target").get<std::string>();
  cfg.dims = j.at("dims").get<std::vector<int>>();
  cfg.trials = j.at("trials").get<int>();
  cfg.seed = j.at("seed").get<uint64_t>();
  cfg.tol = j.at("tol").get<double>();
  cfg.grid = j.at("grid").get<std::string>();
  cfg.format = j.at("format").get<std::string>();
  cfg.jobs = j.at("jobs").get<int>();
  cfg.restarts = j.at("restarts").get<int>();
  cfg.steps = j.at("steps").get<int>();
  cfg.alpha = j.at("alpha").get<double>();
  cfg.norm = j.at("norm").get<std::string>();
  return cfg;
}

ProbeGrid parse_grid(const std::string& spec) {
  ProbeGrid grid;
  std::stringstream ss(spec);
  std::string axis;
  bool saw_p = false, saw_t = false;
  while (std::getline(ss, axis, ';')) {
    const auto colon = axis.find(':');
    if (colon == std::string::npos) throw BadGrid("grid axis needs 'name:values'");
    const std::string name = axis.substr(0, colon);
    const std::vector<double> values = parse_values(axis.substr(colon + 1));
    if (values.empty()) throw BadGrid("grid axis '" + name + "' has no values");
    if (name == "p") {
      grid.ps = values;
      saw_p = true;
    } else if (name == "t") {
      grid.ts = values;
      saw_t = true;
    } else {
      throw BadGrid("unknown grid axis '" + name + "'");
    }
  }
  if (!saw_p) grid.ps = {1.0};
  if (!saw_t) grid.ts = {1.0};
  return grid;
}

RunResult execute(const RunConfig& cfg) {
  RunResult result;
  Json report;
  report["artifact_version"] = kArtifactVersion;
  report["config"] = to_json(cfg);

  if (cfg.command == "check" || cfg.command == "suite") {
    SweepParams params;
    params.dims = cfg.dims;
    std::vector<std::string> ids =
        cfg.command == "check" ? std::vector<std::string>{cfg.target} : suite_checks(cfg.target);
    if (cfg.command == "check") find_check(cfg.target);  // UnknownCheck early
    std::vector<CheckOutcome> outcomes;
    for (const std::string& id : ids) {
      auto part = run_trials_parallel(id, params, cfg.trials, cfg.seed, cfg.tol, cfg.jobs);
      outcomes.insert(outcomes.end(), part.begin(), part.end());
    }
    Json arr = Json::array();
    for (const auto& o : outcomes) arr.push_back(to_json(o));
    report["outcomes"] = std::move(arr);
    report["summary"] = summarize(outcomes);
    for (const std::string& id : ids) {
      int pass = 0, fail = 0;
      double worst = 0.0;
      bool first = true;
      for (const auto& o : outcomes)
        if (o.check_id == id) {
          (o.verdict ? pass : fail)++;
          if (first || o.margin < worst) worst = o.margin;
          first = false;
        }
      result.console.push_back(id + ": " + std::to_string(pass) + " held, " +
                               std::to_string(fail) + " violated, worst margin " +
                               fmt_double(worst));
    }
    for (const auto& o : outcomes)
      if (!o.verdict) result.exit_code = 2;
    if (cfg.format == "csv") result.report_csv = render_csv(outcomes);

  } else if (cfg.command == "probe") {
    const Variant variant = parse_variant(cfg.target);
    const FunctionalSpec spec = probe_spec_from_seed(cfg, variant);
    const ProbeGrid grid = cfg.grid.empty() ? default_grid_for(variant) : parse_grid(cfg.grid);
    const ProbeReport probe = probe_logconvexity(spec, grid, cfg.tol);
    report["probe"] = to_json(probe);
    result.console.push_back("probe " + cfg.target + ": " +
                             (probe.verdict ? "log-convex on grid" : "violation") +
                             ", worst residual " + fmt_double(probe.worst_residual));
    if (!probe.verdict) result.exit_code = 2;

  } else if (cfg.command == "search") {
    const SearchReport sr = minimize_margin(
        cfg.target, cfg.dims.empty() ? 3 : cfg.dims.front(),
        SearchBudget{cfg.restarts, cfg.steps}, cfg.seed);
    report["search"] = to_json(sr);
    result.console.push_back("search " + cfg.target + ": best margin " +
                             fmt_double(sr.best_margin));
    if (sr.best_margin < -1e-8) result.exit_code = 2;

  } else if (cfg.command == "demo") {
    Json demo;
    // closed-form Golden-Thompson slack on the classic 2x2 pair
    {
      Instance inst;
      inst.gen_id = "golden_thompson";
      inst.n = 2;
      inst.m = 2;
      inst.parts["S"] = {ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0}),
                         PartKind::Hermitian};
      inst.parts["T"] = {ComplexMatrix{{Complex{0, 0}, Complex{1, 0}},
                                       {Complex{1, 0}, Complex{0, 0}}},
                         PartKind::Hermitian};
      const CheckOutcome o = run_check("golden_thompson", inst, cfg.tol);
      const double slack =
          2.0 * std::cosh(1.0) * std::cosh(1.0) - 2.0 * std::cosh(std::sqrt(2.0));
      demo["golden_thompson_log_margin"] = json_safe(o.margin);
      demo["golden_thompson_slack_closed_form"] = slack;
      result.console.push_back("golden thompson 2x2 slack (closed form): " + fmt_double(slack));
    }
    Json ratios = Json::array();
    for (double p : {1.0, 2.0, 3.0}) {
      const double r = tightness_cartesian(p);
      ratios.push_back(json_safe(r));
      result.console.push_back("cartesian tightness ratio p=" + fmt_double(p) + ": " +
                               fmt_double(r));
    }
    demo["tightness_cartesian"] = std::move(ratios);
    const SearchReport sr = minimize_margin("det_schur_counterexample", 2,
                                            SearchBudget{5, 50}, cfg.seed);
    demo["det_schur_best_margin"] = json_safe(sr.best_margin);
    result.console.push_back("det schur counterexample margin: " + fmt_double(sr.best_margin));
    if (sr.best_margin >= 0.0) result.exit_code = 2;
    report["demo"] = std::move(demo);

  } else {
    throw BadDomain("unknown command '" + cfg.command + "'");
  }

  result.report_json = report.dump(2) + "\n";
  return result;
}

}  // namespace majorlab
