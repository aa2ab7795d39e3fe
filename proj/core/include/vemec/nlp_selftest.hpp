#pragma once

#include <string>
#include <vector>

namespace vemec {

/// One analytic test case: the solver's result against a known optimum.
struct SelfTestResult {
  std::string name;
  bool passed = false;
  double error = 0.0;      // distance to the known optimum
  double tolerance = 0.0;  // pass threshold
  std::string detail;
};

/// Runs the analytic solver battery: bound-constrained quadratic, linear
/// objective on a disc, unconstrained interior quadratic, phase-I recovery
/// and an intentionally empty interior. Pure and deterministic.
std::vector<SelfTestResult> run_solver_selftest();

}  // namespace vemec
