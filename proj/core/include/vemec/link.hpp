#pragma once

#include "vemec/types.hpp"

namespace vemec {

struct TimeEnergy {
  double time_s = 0.0;
  double energy_j = 0.0;
};

struct RateTime {
  double rate = 0.0;  // bits/s
  double time_s = 0.0;
};

/// Uplink SINR at the AN under full-duplex residual self-interference:
/// p_i * g_up / (p_an * g_si + sigma2_an).
double uplink_sinr(double p_i, double g_up, const SystemConfig& cfg, double g_si);

/// Total received power at the AN: desired + self-interference + noise.
double uplink_received_power(double p_i, double g_up, const SystemConfig& cfg, double g_si);

/// Shannon rate B * log2(1 + sinr).
double uplink_rate(double sinr, const SystemConfig& cfg);

/// Interference-free uplink rate bound B * log2(1 + p_i * g_up / sigma2_an).
double max_uplink_rate(double p_i, double g_up, const SystemConfig& cfg);

/// Operating rate cap for the allocation variable r_i under the configured
/// mode: interference-free bound (ideal) or the physical rate at p_i with
/// residual self-interference (si-limited).
double rate_cap(double p_i, double g_up, double g_si, const SystemConfig& cfg);

/// Smallest transmit power whose rate_cap supports a given rate; inverse of
/// rate_cap in p.
double power_for_rate(double rate, double g_up, double g_si, const SystemConfig& cfg);

/// Uplink slot length m/r and transmit energy p*m/r.
/// Throws DegenerateAllocationError for positive bits at zero rate.
TimeEnergy uplink_time_energy(double m_bits, double rate, double p_i);

/// Uniform CPU frequency that finishes the local task C*(M-m) cycles exactly
/// within tau_up; the energy-minimal choice under the local-before-uplink
/// deadline. Exceeding f_max is an error, never a silent clamp.
double optimal_cpu_frequency(double M_bits, double m_bits, double tau_up,
                             const SystemConfig& cfg);

/// Local compute energy kappa * C^3 * (M-m)^3 / tau_up^2, i.e. the per-cycle
/// energy sum evaluated at the uniform frequency with tau_lo = tau_up.
double local_energy(double M_bits, double m_bits, double tau_up, const SystemConfig& cfg);

/// Downlink SNR at the vehicle: beta * p_an * g_down / sigma2_vn.
double downlink_snr(double g_down, const SystemConfig& cfg);

/// Downlink rate and slot length for returning alpha*m bits.
RateTime downlink_rate_time(double m_bits, double g_down, const SystemConfig& cfg);

/// Harvested energy beta * p_an * g_down * tau_down.
double harvested_energy(double g_down, double tau_down, const SystemConfig& cfg);

/// Fraction of the AN slot energy a vehicle can actually bank:
/// min(beta * g_down, 1). The cap keeps the harvest below the energy the AN
/// spent in the slot, so e_eh <= e_an holds for every channel draw.
double harvest_efficiency(double g_down, const SystemConfig& cfg);

}  // namespace vemec
