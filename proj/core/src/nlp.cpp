#include "vemec/nlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vemec/errors.hpp"

namespace vemec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void central_difference(const std::function<double(const std::vector<double>&)>& fn,
                        const std::vector<double>& x, std::vector<double>& grad) {
  std::vector<double> xp = x;
  const int n = static_cast<int>(x.size());
  grad.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double h = 1e-6 * std::max(1.0, std::fabs(x[j]));
    double orig = xp[j];
    xp[j] = orig + h;
    double fp = fn(xp);
    xp[j] = orig - h;
    double fm = fn(xp);
    xp[j] = orig;
    grad[j] = (fp - fm) / (2.0 * h);
  }
}

class BarrierEvaluator {
 public:
  BarrierEvaluator(const NlpProblem& p, const SolverOptions& opts)
      : p_(p), opts_(opts), g_(p.inequalities.size()) {}

  bool bounds_ok(const std::vector<double>& x) const {
    for (int j = 0; j < p_.dim; ++j) {
      if (std::isfinite(p_.lower[j]) && !(x[j] > p_.lower[j])) return false;
      if (std::isfinite(p_.upper[j]) && !(x[j] < p_.upper[j])) return false;
    }
    return true;
  }

  // Evaluates all inequalities; returns false when any is >= 0.
  bool constraints_ok(const std::vector<double>& x) {
    bool ok = true;
    for (std::size_t k = 0; k < p_.inequalities.size(); ++k) {
      g_[k] = p_.inequalities[k].value(x);
      if (!(g_[k] < 0.0)) ok = false;
    }
    return ok;
  }

  double max_constraint(const std::vector<double>& x) {
    double w = -kInf;
    for (const auto& ineq : p_.inequalities) w = std::max(w, ineq.value(x));
    return w;
  }

  // Penalized objective; requires constraints_ok(x) to have just run.
  double barrier_value(const std::vector<double>& x, double mu, double f) const {
    double phi = f;
    for (double gk : g_) phi += mu * std::log(-gk);
    for (int j = 0; j < p_.dim; ++j) {
      if (std::isfinite(p_.lower[j])) phi += mu * std::log(x[j] - p_.lower[j]);
      if (std::isfinite(p_.upper[j])) phi += mu * std::log(p_.upper[j] - x[j]);
    }
    return phi;
  }

  double objective(const std::vector<double>& x) const { return p_.objective(x); }

  void objective_gradient(const std::vector<double>& x, std::vector<double>& grad) {
    if (p_.objective_gradient) {
      grad.assign(p_.dim, 0.0);
      p_.objective_gradient(x, grad);
    } else {
      central_difference(p_.objective, x, grad);
    }
  }

  // Barrier gradient and a diagonal curvature model built from the same
  // first-order information (squared constraint gradients over squared
  // slacks); keeps the ascent Hessian-free but tames the boundary cliffs.
  void barrier_gradient(const std::vector<double>& x, double mu,
                        std::vector<double>& grad, std::vector<double>& diag) {
    objective_gradient(x, grad);
    diag.assign(p_.dim, 1.0);
    for (std::size_t k = 0; k < p_.inequalities.size(); ++k) {
      const auto& ineq = p_.inequalities[k];
      if (ineq.gradient) {
        gk_grad_.assign(p_.dim, 0.0);
        ineq.gradient(x, gk_grad_);
      } else {
        central_difference(ineq.value, x, gk_grad_);
      }
      double slack = -g_[k];
      for (int j = 0; j < p_.dim; ++j) {
        grad[j] -= mu * gk_grad_[j] / slack;
        diag[j] += mu * gk_grad_[j] * gk_grad_[j] / (slack * slack);
      }
    }
    for (int j = 0; j < p_.dim; ++j) {
      if (std::isfinite(p_.lower[j])) {
        double s = x[j] - p_.lower[j];
        grad[j] += mu / s;
        diag[j] += mu / (s * s);
      }
      if (std::isfinite(p_.upper[j])) {
        double s = p_.upper[j] - x[j];
        grad[j] -= mu / s;
        diag[j] += mu / (s * s);
      }
    }
  }

  const std::vector<double>& g() const { return g_; }

 private:
  const NlpProblem& p_;
  const SolverOptions& opts_;
  std::vector<double> g_;
  std::vector<double> gk_grad_;
};

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kIterationCap: return "iteration-cap";
    case SolveStatus::kInfeasibleStart: return "infeasible-start-unrecoverable";
  }
  return "unknown";
}

NlpSolution solve(const NlpProblem& problem, const std::vector<double>& x0,
                  const SolverOptions& opts) {
  NlpSolution sol;
  if (problem.dim <= 0 || static_cast<int>(x0.size()) != problem.dim ||
      static_cast<int>(problem.lower.size()) != problem.dim ||
      static_cast<int>(problem.upper.size()) != problem.dim)
    throw std::invalid_argument("solve: inconsistent problem dimensions");

  BarrierEvaluator ev(problem, opts);

  if (!ev.bounds_ok(x0) || !ev.constraints_ok(x0)) {
    sol.x = x0;
    sol.status = SolveStatus::kInfeasibleStart;
    sol.objective_value = -kInf;
    return sol;
  }

  std::vector<double> x = x0;
  double f = ev.objective(x);

  std::vector<double> x_best = x;
  double f_best = f;

  std::vector<double> grad, diag, step, x_new;
  double mu = opts.mu0;
  bool final_stage_converged = false;

  for (int outer = 0; outer < opts.max_outer; ++outer) {
    const double tol_inner = std::max(opts.grad_tol, 0.01 * mu);
    ev.constraints_ok(x);
    double phi = ev.barrier_value(x, mu, f);
    const double phi_start = phi;
    double alpha_warm = 1.0;
    bool stationary = false;

    for (int inner = 0; inner < opts.max_inner; ++inner) {
      ev.constraints_ok(x);
      ev.barrier_gradient(x, mu, grad, diag);

      double gnorm = 0.0;
      for (double gj : grad) gnorm = std::max(gnorm, std::fabs(gj));
      if (gnorm <= tol_inner) {
        stationary = true;
        break;
      }

      step.resize(x.size());
      double slope = 0.0;
      for (int j = 0; j < problem.dim; ++j) {
        step[j] = grad[j] / diag[j];
        slope += grad[j] * step[j];
      }

      double alpha = std::min(2.0 * alpha_warm, 1e4);
      bool accepted = false;
      x_new.resize(x.size());
      while (alpha > 1e-18) {
        for (int j = 0; j < problem.dim; ++j) x_new[j] = x[j] + alpha * step[j];
        if (ev.bounds_ok(x_new) && ev.constraints_ok(x_new)) {
          double f_new = ev.objective(x_new);
          double phi_new = ev.barrier_value(x_new, mu, f_new);
          if (phi_new >= phi + opts.armijo_c * alpha * slope) {
            x.swap(x_new);
            f = f_new;
            phi = phi_new;
            accepted = true;
            break;
          }
        }
        alpha *= opts.step_shrink;
      }
      if (!accepted) break;  // ascent stalled at this barrier weight
      alpha_warm = alpha;

      if (f > f_best) {
        f_best = f;
        x_best = x;
      }
      if (opts.trace_iterates) sol.iterates.push_back(x);
    }

    ev.constraints_ok(x);
    double maxg = -kInf;
    for (double gk : ev.g()) maxg = std::max(maxg, gk);
    sol.trace.push_back({mu, f, maxg, phi_start, phi});

    if (mu <= opts.mu_min) {
      final_stage_converged = stationary;
      break;
    }
    mu = std::max(mu * opts.mu_shrink, opts.mu_min);
  }

  // Monotone safeguard: report the best strictly feasible iterate seen,
  // which is never below the starting objective.
  sol.x = x_best;
  sol.objective_value = f_best;
  sol.status = final_stage_converged ? SolveStatus::kConverged : SolveStatus::kIterationCap;
  return sol;
}

std::vector<double> find_interior_point(const NlpProblem& problem,
                                        const std::vector<double>& hint) {
  if (static_cast<int>(hint.size()) != problem.dim)
    throw std::invalid_argument("find_interior_point: hint has wrong dimension");

  // Clamp the hint strictly inside the box.
  std::vector<double> x = hint;
  for (int j = 0; j < problem.dim; ++j) {
    double lo = problem.lower[j];
    double hi = problem.upper[j];
    if (std::isfinite(lo) && std::isfinite(hi)) {
      double margin = 1e-9 * std::max(1.0, hi - lo);
      x[j] = std::clamp(x[j], lo + margin, hi - margin);
    } else if (std::isfinite(lo)) {
      x[j] = std::max(x[j], lo + 1e-9 * std::max(1.0, std::fabs(lo)));
    } else if (std::isfinite(hi)) {
      x[j] = std::min(x[j], hi - 1e-9 * std::max(1.0, std::fabs(hi)));
    }
  }

  double worst = -kInf;
  for (const auto& ineq : problem.inequalities) worst = std::max(worst, ineq.value(x));
  if (worst < -1e-10) return x;  // already safely interior

  // Max-min-slack phase-I over (x, s): maximize -s subject to g_k(x) <= s.
  const int n = problem.dim;
  NlpProblem aug;
  aug.dim = n + 1;
  aug.lower.assign(problem.lower.begin(), problem.lower.end());
  aug.upper.assign(problem.upper.begin(), problem.upper.end());
  aug.lower.push_back(-kInf);
  aug.upper.push_back(kInf);
  aug.objective = [n](const std::vector<double>& z) { return -z[n]; };
  aug.objective_gradient = [n](const std::vector<double>&, std::vector<double>& grad) {
    grad[n] = -1.0;
  };
  for (const auto& ineq : problem.inequalities) {
    const NlpProblem::Inequality* src = &ineq;
    NlpProblem::Inequality shifted;
    shifted.name = ineq.name;
    shifted.value = [src, n](const std::vector<double>& z) {
      std::vector<double> xz(z.begin(), z.begin() + n);
      return src->value(xz) - z[n];
    };
    if (ineq.gradient) {
      shifted.gradient = [src, n](const std::vector<double>& z, std::vector<double>& grad) {
        std::vector<double> xz(z.begin(), z.begin() + n);
        std::vector<double> gx(n, 0.0);
        src->gradient(xz, gx);
        for (int j = 0; j < n; ++j) grad[j] = gx[j];
        grad[n] = -1.0;
      };
    }
    aug.inequalities.push_back(std::move(shifted));
  }

  std::vector<double> z = x;
  z.push_back(worst + std::max(1e-8, 0.1 * std::fabs(worst)));

  SolverOptions opts;
  opts.mu_min = 1e-6;
  opts.max_inner = 300;
  NlpSolution sol = solve(aug, z, opts);

  std::vector<double> out(sol.x.begin(), sol.x.begin() + n);
  double slack = -kInf;
  for (const auto& ineq : problem.inequalities) slack = std::max(slack, ineq.value(out));
  if (!(slack < 0.0))
    throw InfeasibleStartError("find_interior_point: no strictly interior point found");
  return out;
}

double check_gradient(const NlpProblem& problem, const std::vector<double>& x) {
  double worst = 0.0;
  std::vector<double> analytic, fd;

  auto compare = [&](const std::function<double(const std::vector<double>&)>& fn,
                     const std::function<void(const std::vector<double>&,
                                              std::vector<double>&)>& grad_fn) {
    if (!grad_fn) return;
    analytic.assign(problem.dim, 0.0);
    grad_fn(x, analytic);
    central_difference(fn, x, fd);
    for (int j = 0; j < problem.dim; ++j) {
      double denom = std::max({1.0, std::fabs(analytic[j]), std::fabs(fd[j])});
      worst = std::max(worst, std::fabs(analytic[j] - fd[j]) / denom);
    }
  };

  compare(problem.objective, problem.objective_gradient);
  for (const auto& ineq : problem.inequalities) compare(ineq.value, ineq.gradient);
  return worst;
}

}  // namespace vemec
