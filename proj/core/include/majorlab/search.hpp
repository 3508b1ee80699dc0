#ifndef MAJORLAB_SEARCH_HPP
#define MAJORLAB_SEARCH_HPP

#include <string>
#include <utility>
#include <vector>

#include "majorlab/suites.hpp"

namespace majorlab {

struct SearchBudget {
  int restarts = 20;
  int steps = 200;
};

// Randomized-restart hill climbing over instance perturbations. The margin
// being minimized is the check's worst margin, so negative best_margin means
// a violation was found. Reports are self-verifying: best_margin is the
// re-evaluated margin of best_instance.
struct SearchReport {
  std::string objective_id;
  uint64_t seed = 0;
  SearchBudget budget;
  Instance best_instance;
  double best_margin = 0.0;
  std::vector<std::pair<int, double>> trajectory;  // improvements: (global step, margin)
  int restarts = 0;
  int steps = 0;
};

// Objectives: every registry check id (tightness / counterexample hunting),
// plus "lie_trotter_z" probing the open question whether
// (A^p Z* B^p Z A^p)^{1/p} still converges with a third matrix Z.
std::vector<std::string> objective_ids();

SearchReport minimize_margin(const std::string& objective_id, int n, SearchBudget budget,
                             uint64_t seed);

// Margin of one objective on one instance (what the search minimizes).
double objective_margin(const std::string& objective_id, const Instance& inst);

}  // namespace majorlab

#endif
