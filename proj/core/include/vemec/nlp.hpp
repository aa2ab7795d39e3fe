#pragma once

#include <functional>
#include <string>
#include <vector>

namespace vemec {

/// Smooth inequality-constrained maximization problem:
///   maximize objective(x)  s.t.  g_k(x) <= 0,  lower <= x <= upper.
/// Gradients are optional; central finite differences fill in for any
/// callable without one. Gradient callbacks receive a zeroed vector of
/// size dim and write into it. All callables must be safe to invoke
/// concurrently from multiple threads as read-only functions.
struct NlpProblem {
  struct Inequality {
    std::string name;
    std::function<double(const std::vector<double>&)> value;
    std::function<void(const std::vector<double>&, std::vector<double>&)> gradient;  // optional
  };

  int dim = 0;
  std::function<double(const std::vector<double>&)> objective;
  std::function<void(const std::vector<double>&, std::vector<double>&)> objective_gradient;  // optional
  std::vector<Inequality> inequalities;
  std::vector<double> lower;  // may contain -inf
  std::vector<double> upper;  // may contain +inf
};

struct SolverOptions {
  double mu0 = 1.0;          // initial barrier weight
  double mu_shrink = 0.1;    // barrier reduction factor per outer stage
  double mu_min = 1e-8;      // terminal barrier weight
  double armijo_c = 1e-4;    // sufficient-increase constant
  double step_shrink = 0.5;  // backtracking factor
  double grad_tol = 1e-6;    // stationarity tolerance on the barrier gradient
  int max_outer = 60;        // outer stage cap
  int max_inner = 400;       // inner ascent iteration cap per stage
  bool trace_iterates = false;  // record every accepted iterate
};

enum class SolveStatus {
  kConverged,
  kIterationCap,
  kInfeasibleStart,
};

std::string to_string(SolveStatus s);

struct NlpSolution {
  std::vector<double> x;
  double objective_value = 0.0;
  SolveStatus status = SolveStatus::kInfeasibleStart;

  struct TracePoint {
    double mu = 0.0;
    double objective = 0.0;       // raw objective at stage end
    double max_constraint = 0.0;  // max g_k at stage end
    double barrier_start = 0.0;   // penalized objective entering the stage
    double barrier_end = 0.0;     // penalized objective leaving the stage
  };
  std::vector<TracePoint> trace;
  std::vector<std::vector<double>> iterates;  // filled when trace_iterates
};

/// Finds a strictly interior point by maximizing the minimum constraint
/// slack starting from the hint. Returns the hint unchanged when it is
/// already safely interior. Throws InfeasibleStartError when no interior
/// point is found within the iteration caps.
std::vector<double> find_interior_point(const NlpProblem& problem,
                                        const std::vector<double>& hint);

/// Log-barrier interior-point maximization: damped preconditioned gradient
/// ascent with Armijo backtracking on the penalized objective, rejecting
/// every step that leaves the strict interior; the barrier weight shrinks
/// from mu0 to mu_min. The returned objective value is never below the
/// starting value minus grad_tol.
NlpSolution solve(const NlpProblem& problem, const std::vector<double>& x0,
                  const SolverOptions& opts = {});

/// Compares analytic gradients of the objective and every inequality
/// against central finite differences (h = 1e-6 * max(1, |x_j|)); returns
/// the worst relative error.
double check_gradient(const NlpProblem& problem, const std::vector<double>& x);

}  // namespace vemec
