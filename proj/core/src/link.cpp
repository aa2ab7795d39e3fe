#include "vemec/link.hpp"

#include <algorithm>
#include <cmath>

#include "vemec/errors.hpp"

namespace vemec {

double uplink_sinr(double p_i, double g_up, const SystemConfig& cfg, double g_si) {
  return p_i * g_up / (cfg.p_an * g_si + cfg.sigma2_an);
}

double uplink_received_power(double p_i, double g_up, const SystemConfig& cfg, double g_si) {
  return p_i * g_up + cfg.p_an * g_si + cfg.sigma2_an;
}

double uplink_rate(double sinr, const SystemConfig& cfg) {
  return cfg.B * std::log2(1.0 + sinr);
}

double max_uplink_rate(double p_i, double g_up, const SystemConfig& cfg) {
  return cfg.B * std::log2(1.0 + p_i * g_up / cfg.sigma2_an);
}

double rate_cap(double p_i, double g_up, double g_si, const SystemConfig& cfg) {
  if (cfg.rate_cap_mode == RateCapMode::kIdeal) return max_uplink_rate(p_i, g_up, cfg);
  return uplink_rate(uplink_sinr(p_i, g_up, cfg, g_si), cfg);
}

double power_for_rate(double rate, double g_up, double g_si, const SystemConfig& cfg) {
  double denom = cfg.rate_cap_mode == RateCapMode::kIdeal
                     ? cfg.sigma2_an
                     : cfg.p_an * g_si + cfg.sigma2_an;
  return (std::exp2(rate / cfg.B) - 1.0) * denom / g_up;
}

TimeEnergy uplink_time_energy(double m_bits, double rate, double p_i) {
  if (m_bits <= 0.0) return {0.0, 0.0};
  if (rate <= 0.0)
    throw DegenerateAllocationError("uplink_time_energy: positive bits at zero rate");
  double tau = m_bits / rate;
  return {tau, p_i * tau};
}

double optimal_cpu_frequency(double M_bits, double m_bits, double tau_up,
                             const SystemConfig& cfg) {
  double local_bits = M_bits - m_bits;
  if (local_bits <= 0.0) return 0.0;
  if (tau_up <= 0.0)
    throw InfeasibleLocalComputeError(
        "optimal_cpu_frequency: local bits remain but uplink slot is empty");
  double f = cfg.C * local_bits / tau_up;
  if (f > cfg.f_max)
    throw FrequencyBoundError("optimal_cpu_frequency: required frequency exceeds f_max");
  return f;
}

double local_energy(double M_bits, double m_bits, double tau_up, const SystemConfig& cfg) {
  double local_bits = M_bits - m_bits;
  if (local_bits <= 0.0) return 0.0;
  if (tau_up <= 0.0)
    throw InfeasibleLocalComputeError(
        "local_energy: local bits remain but uplink slot is empty");
  double cycles = cfg.C * local_bits;
  return cfg.kappa * cycles * cycles * cycles / (tau_up * tau_up);
}

double downlink_snr(double g_down, const SystemConfig& cfg) {
  return cfg.beta * cfg.p_an * g_down / cfg.sigma2_vn;
}

RateTime downlink_rate_time(double m_bits, double g_down, const SystemConfig& cfg) {
  RateTime out;
  out.rate = cfg.B * std::log2(1.0 + downlink_snr(g_down, cfg));
  double ret_bits = cfg.alpha * m_bits;
  if (ret_bits <= 0.0) {
    out.time_s = 0.0;
    return out;
  }
  if (out.rate <= 0.0)
    throw DegenerateAllocationError("downlink_rate_time: returned bits at zero rate");
  out.time_s = ret_bits / out.rate;
  return out;
}

double harvested_energy(double g_down, double tau_down, const SystemConfig& cfg) {
  return cfg.beta * cfg.p_an * g_down * tau_down;
}

double harvest_efficiency(double g_down, const SystemConfig& cfg) {
  return std::min(cfg.beta * g_down, 1.0);
}

}  // namespace vemec
