#ifndef MAJORLAB_RUNNER_HPP
#define MAJORLAB_RUNNER_HPP

#include <string>
#include <vector>

#include "majorlab/report.hpp"

namespace majorlab {

// One fully serializable run description; the CLI is a thin wrapper around
// execute(). A persisted config re-executes to an identical report.
struct RunConfig {
  std::string command;  // "suite" | "check" | "probe" | "search" | "demo"
  std::string target;   // suite/check id, probe variant, or objective id
  std::vector<int> dims = {3};
  int trials = 50;
  uint64_t seed = 0;
  double tol = 1e-9;
  std::string grid;  // "p:a,b,c;t:x,y,z" (probe command)
  std::string format = "json";
  int jobs = 1;
  int restarts = 20;
  int steps = 200;
  double alpha = 1.0;
  std::string norm = "operator";
};

Json to_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& j);

ProbeGrid parse_grid(const std::string& spec);  // BadGrid on malformed text

struct RunResult {
  int exit_code = 0;          // 0 all pass, 2 some statement failed
  std::string report_json;    // always produced
  std::string report_csv;     // produced when format == "csv"
  std::vector<std::string> console;  // one line per headline result
};

RunResult execute(const RunConfig& cfg);

}  // namespace majorlab

#endif
