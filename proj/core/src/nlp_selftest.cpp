#include "vemec/nlp_selftest.hpp"

#include <cmath>
#include <cstdio>

#include "vemec/errors.hpp"
#include "vemec/nlp.hpp"

namespace vemec {

namespace {

SelfTestResult make_result(const std::string& name, double error, double tol,
                           const std::string& detail) {
  SelfTestResult r;
  r.name = name;
  r.error = error;
  r.tolerance = tol;
  r.passed = error <= tol;
  r.detail = detail;
  return r;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// maximize -(x-3)^2 on [0,2]; optimum at the upper bound x = 2.
SelfTestResult box_quadratic() {
  NlpProblem p;
  p.dim = 1;
  p.lower = {0.0};
  p.upper = {2.0};
  p.objective = [](const std::vector<double>& x) { return -(x[0] - 3.0) * (x[0] - 3.0); };
  p.objective_gradient = [](const std::vector<double>& x, std::vector<double>& g) {
    g[0] = -2.0 * (x[0] - 3.0);
  };
  NlpSolution sol = solve(p, {1.0});
  double err = std::fabs(sol.x[0] - 2.0);
  return make_result("box-quadratic", err, 1e-6, "x = " + fmt(sol.x[0]) + ", expect 2");
}

// maximize x+y subject to x^2+y^2 <= 1; optimum (sqrt2/2, sqrt2/2).
SelfTestResult disc_linear() {
  NlpProblem p;
  p.dim = 2;
  p.lower = {-2.0, -2.0};
  p.upper = {2.0, 2.0};
  p.objective = [](const std::vector<double>& x) { return x[0] + x[1]; };
  p.objective_gradient = [](const std::vector<double>&, std::vector<double>& g) {
    g[0] = 1.0;
    g[1] = 1.0;
  };
  p.inequalities.push_back(
      {"disc", [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1] - 1.0; },
       [](const std::vector<double>& x, std::vector<double>& g) {
         g[0] = 2.0 * x[0];
         g[1] = 2.0 * x[1];
       }});
  NlpSolution sol = solve(p, {0.0, 0.0});
  const double s = std::sqrt(2.0) / 2.0;
  double err = std::hypot(sol.x[0] - s, sol.x[1] - s);
  return make_result("disc-linear", err, 1e-4,
                     "x = (" + fmt(sol.x[0]) + ", " + fmt(sol.x[1]) + ")");
}

// maximize -|x|^2 on [-1,1]^5; optimum at the origin.
SelfTestResult box_origin() {
  const int d = 5;
  NlpProblem p;
  p.dim = d;
  p.lower.assign(d, -1.0);
  p.upper.assign(d, 1.0);
  p.objective = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s -= v * v;
    return s;
  };
  p.objective_gradient = [](const std::vector<double>& x, std::vector<double>& g) {
    for (std::size_t j = 0; j < x.size(); ++j) g[j] = -2.0 * x[j];
  };
  std::vector<double> x0(d, 0.5);
  NlpSolution sol = solve(p, x0);
  double err = 0.0;
  for (double v : sol.x) err = std::max(err, std::fabs(v));
  return make_result("box-origin", err, 1e-6, "|x|_inf = " + fmt(err));
}

// Phase-I from an exterior hint on box [0,2] with g(x) = x - 1 <= 0.
SelfTestResult phase1_recovery() {
  NlpProblem p;
  p.dim = 1;
  p.lower = {0.0};
  p.upper = {2.0};
  p.objective = [](const std::vector<double>& x) { return x[0]; };
  p.inequalities.push_back(
      {"halfline", [](const std::vector<double>& x) { return x[0] - 1.0; }, nullptr});
  std::vector<double> x = find_interior_point(p, {1.7});
  bool inside = x[0] > 0.0 && x[0] < 1.0;
  return make_result("phase1-recovery", inside ? 0.0 : 1.0, 0.5, "x = " + fmt(x[0]));
}

// Contradictory constraints x <= -1 and x >= 1 on [-2,2]: empty interior.
SelfTestResult phase1_empty() {
  NlpProblem p;
  p.dim = 1;
  p.lower = {-2.0};
  p.upper = {2.0};
  p.objective = [](const std::vector<double>& x) { return x[0]; };
  p.inequalities.push_back(
      {"le", [](const std::vector<double>& x) { return x[0] + 1.0; }, nullptr});
  p.inequalities.push_back(
      {"ge", [](const std::vector<double>& x) { return 1.0 - x[0]; }, nullptr});
  bool threw = false;
  try {
    find_interior_point(p, {0.0});
  } catch (const InfeasibleStartError&) {
    threw = true;
  }
  return make_result("phase1-empty-interior", threw ? 0.0 : 1.0, 0.5,
                     threw ? "rejected as expected" : "accepted an infeasible problem");
}

}  // namespace

std::vector<SelfTestResult> run_solver_selftest() {
  std::vector<SelfTestResult> out;
  out.push_back(box_quadratic());
  out.push_back(disc_linear());
  out.push_back(box_origin());
  out.push_back(phase1_recovery());
  out.push_back(phase1_empty());
  return out;
}

}  // namespace vemec
