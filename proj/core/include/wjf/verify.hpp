#pragma once

#include <string>
#include <vector>

namespace wjf {

// One release check: a named identity or grid verified end to end with exact
// arithmetic. detail summarizes the scope on success and names the first
// mismatch on failure; it is deterministic, so byte-identical across runs.
// Wall time is reported separately.
struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the ten release checks in order. grid_bound caps a + b + c in the two
// structure grids (the published grids use 4). Every check is self-contained:
// a throw inside one is caught and reported as its failure, so the remaining
// checks still run.
std::vector<CriterionResult> run_acceptance(long long grid_bound = 4);

}  // namespace wjf
