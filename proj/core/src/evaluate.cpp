#include "vemec/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vemec/errors.hpp"
#include "vemec/link.hpp"

namespace vemec {

double ConstraintSet::worst() const {
  double w = -std::numeric_limits<double>::infinity();
  for (double r : residuals) w = std::max(w, r);
  return w;
}

const ConstraintSet& ConstraintReport::find(const std::string& label) const {
  for (const auto& s : sets)
    if (s.label == label) return s;
  throw std::out_of_range("no constraint set labeled '" + label + "'");
}

double ConstraintReport::max_scaled_residual() const {
  double w = -std::numeric_limits<double>::infinity();
  for (const auto& s : sets)
    for (double r : s.residuals) w = std::max(w, r / std::max(1.0, s.scale));
  return w;
}

namespace {

void check_shapes(const SystemConfig& cfg, const ChannelSet& ch, const Allocation& a) {
  const auto k = static_cast<std::size_t>(cfg.K);
  if (ch.K != cfg.K || ch.N != cfg.N)
    throw std::invalid_argument("evaluate: channel dimensions do not match config");
  if (a.f.size() != k || a.p.size() != k || a.m.size() != k || a.r.size() != k)
    throw std::invalid_argument("evaluate: allocation length does not match K");
}

double population_cv2(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  if (mean == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) {
    double d = v / mean - 1.0;
    s += d * d;
  }
  return s / static_cast<double>(x.size());
}

}  // namespace

EvalReport evaluate(const SystemConfig& cfg, const ChannelSet& ch, const Allocation& a) {
  check_shapes(cfg, ch, a);
  const int K = cfg.K;

  EvalReport rep;
  rep.tau_up.resize(K);
  rep.tau_down.resize(K);
  rep.tau_lo.resize(K);
  rep.e_vn.resize(K);
  rep.e_lo.resize(K);
  rep.e_eh.resize(K);
  rep.e_an.resize(K);
  rep.rate_up.resize(K);
  rep.rate_down.resize(K);
  rep.ee.resize(K);

  for (int i = 0; i < K; ++i) {
    TimeEnergy up = uplink_time_energy(a.m[i], a.r[i], a.p[i]);
    rep.tau_up[i] = up.time_s;
    rep.e_vn[i] = up.energy_j;
    rep.rate_up[i] = a.r[i];

    RateTime down = downlink_rate_time(a.m[i], ch.g_down[i], cfg);
    rep.rate_down[i] = down.rate;
    rep.tau_down[i] = down.time_s;

    double local_bits = cfg.M[i] - a.m[i];
    if (local_bits <= 0.0) {
      rep.tau_lo[i] = 0.0;
      rep.e_lo[i] = 0.0;
    } else {
      if (a.f[i] <= 0.0)
        throw InfeasibleLocalComputeError(
            "evaluate: local bits remain but CPU frequency is zero");
      double cycles = cfg.C * local_bits;
      rep.tau_lo[i] = cycles / a.f[i];
      rep.e_lo[i] = cfg.kappa * cycles * a.f[i] * a.f[i];
    }

    rep.e_an[i] = cfg.p_an * rep.tau_down[i];
    rep.e_eh[i] = harvest_efficiency(ch.g_down[i], cfg) * rep.e_an[i];

    double total_energy = rep.e_vn[i] + rep.e_lo[i];
    if (total_energy <= 0.0)
      throw DegenerateAllocationError("evaluate: zero vehicle energy, efficiency undefined");
    rep.ee[i] = a.r[i] / total_energy;
  }

  for (int i = 0; i < K; ++i) {
    rep.avg_ee += rep.ee[i];
    rep.sum_tau_up += rep.tau_up[i];
  }
  rep.avg_ee /= static_cast<double>(K);
  rep.var_ee = population_cv2(rep.ee);
  rep.var_tau_up = population_cv2(rep.tau_up);
  return rep;
}

ConstraintReport evaluate_constraints(const SystemConfig& cfg, const ChannelSet& ch,
                                      const Allocation& a, double tol) {
  check_shapes(cfg, ch, a);
  const int K = cfg.K;
  EvalReport rep = evaluate(cfg, ch, a);

  ConstraintReport out;
  out.tol = tol;

  auto add = [&out](std::string label, std::vector<double> residuals, double scale) {
    out.sets.push_back({std::move(label), std::move(residuals), scale});
  };

  double e_scale = 1e-12;
  for (int i = 0; i < K; ++i)
    e_scale = std::max({e_scale, rep.e_vn[i] + rep.e_lo[i], rep.e_eh[i], rep.e_an[i]});

  std::vector<double> c1(K), c2(K);
  for (int i = 0; i < K; ++i) {
    c1[i] = rep.e_vn[i] + rep.e_lo[i] - rep.e_eh[i];
    c2[i] = rep.e_eh[i] - rep.e_an[i];
  }
  add("C1", std::move(c1), e_scale);
  add("C2", std::move(c2), e_scale);

  std::vector<double> c3;
  c3.reserve(2 * K);
  for (int i = 0; i < K; ++i) {
    c3.push_back(a.f[i] - cfg.f_max);
    c3.push_back(-a.f[i]);
  }
  add("C3", std::move(c3), cfg.f_max);

  std::vector<double> c4;
  c4.reserve(2 * K);
  for (int i = 0; i < K; ++i) {
    c4.push_back(cfg.p_min - a.p[i]);
    c4.push_back(a.p[i] - cfg.p_max);
  }
  add("C4", std::move(c4), cfg.p_max);

  std::vector<double> c5;
  double m_scale = 1.0;
  c5.reserve(2 * K);
  for (int i = 0; i < K; ++i) {
    c5.push_back(-a.m[i]);
    c5.push_back(a.m[i] - cfg.M[i]);
    m_scale = std::max(m_scale, cfg.M[i]);
  }
  add("C5", std::move(c5), m_scale);

  std::vector<double> c6;
  double r_scale = 1.0;
  c6.reserve(2 * K);
  for (int i = 0; i < K; ++i) {
    double cap = rate_cap(a.p[i], ch.g_up[i], ch.g_si, cfg);
    c6.push_back(-a.r[i]);
    c6.push_back(a.r[i] - cap);
    r_scale = std::max(r_scale, cap);
  }
  add("C6", std::move(c6), r_scale);

  std::vector<double> c7;
  c7.reserve(2 * K);
  for (int i = 0; i < K; ++i) {
    c7.push_back(rep.tau_lo[i] - rep.tau_up[i]);
    c7.push_back(-rep.tau_lo[i]);
  }
  add("C7", std::move(c7), cfg.T);

  // Pipelining: the previous vehicle's downlink must fit inside this
  // vehicle's uplink slot.
  std::vector<double> c8;
  c8.reserve(std::max(0, K - 1));
  for (int i = 1; i < K; ++i) c8.push_back(rep.tau_down[i - 1] - rep.tau_up[i]);
  add("C8", std::move(c8), cfg.T);

  add("C9", {rep.sum_tau_up - cfg.T}, cfg.T);

  double sum_tau_down = 0.0;
  for (int i = 0; i < K; ++i) sum_tau_down += rep.tau_down[i];
  add("C10", {sum_tau_down - cfg.T}, cfg.T);

  // Prefix uplink + suffix downlink budgets for every cut point; the last
  // entry (cut = K) is the all-uplink-plus-final-downlink budget.
  std::vector<double> c11(K);
  std::vector<double> pref(K + 1, 0.0), suf(K + 2, 0.0);
  for (int i = 0; i < K; ++i) pref[i + 1] = pref[i] + rep.tau_up[i];
  for (int i = K - 1; i >= 0; --i) suf[i + 1] = suf[i + 2] + rep.tau_down[i];
  for (int t = 1; t <= K; ++t) c11[t - 1] = pref[t] + suf[t] - cfg.T;
  add("C11", std::move(c11), cfg.T);

  out.feasible = true;
  for (const auto& s : out.sets) {
    double threshold = std::max(1e-12, tol * std::max(1.0, s.scale));
    for (double r : s.residuals)
      if (!(r <= threshold)) out.feasible = false;
  }
  return out;
}

}  // namespace vemec
