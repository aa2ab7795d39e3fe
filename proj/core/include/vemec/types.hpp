#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace vemec {

enum class RateCapMode {
  kIdeal,      // uplink rate bounded by the interference-free Shannon limit
  kSiLimited,  // uplink rate bounded by the rate under residual self-interference
};

std::string to_string(RateCapMode mode);
RateCapMode rate_cap_mode_from_string(const std::string& s);

/// All scalar system parameters plus per-vehicle task sizes.
///
/// Defaults mirror the reference simulation setup; M defaults to a uniform
/// 5e5 bits per vehicle and can be overridden per vehicle.
struct SystemConfig {
  int K = 10;              // number of vehicle nodes
  int N = 8;               // anchor-node antenna count
  double B = 2e6;          // bandwidth [Hz]
  double T = 0.5;          // frame duration [s]
  double C = 1e3;          // CPU cycles per bit
  double kappa = 1e-33;    // effective capacitance coefficient
  double alpha = 0.8;      // returned fraction of offloaded task bits
  double beta = 0.2;       // energy conversion ratio of the PS receiver
  double p_an = 10.0;      // anchor-node transmit power [W]
  double p_min = 1.0;      // vehicle transmit power lower bound [W]
  double p_max = 5.0;      // vehicle transmit power upper bound [W]
  double f_max = 1e11;     // maximal CPU frequency [Hz]
  double sigma2_an = 1e-7; // AN receiver noise variance [W]
  double sigma2_vn = 1e-7; // vehicle receiver noise variance [W]
  double sigma2_ps = 1e-7; // PS receiver noise variance [W]; carried, unused
  std::vector<double> M = std::vector<double>(10, 5e5);  // task sizes [bits]
  RateCapMode rate_cap_mode = RateCapMode::kIdeal;
  std::uint64_t seed = 20240801;

  /// Throws ConfigError when any invariant is violated.
  void validate() const;
};

/// One random realization of the uplink/downlink channels and the AN
/// self-interference channel, plus the derived trace gains that are the
/// only quantities entering the rate and energy expressions.
struct ChannelSet {
  int K = 0;
  int N = 0;
  std::vector<std::vector<double>> h_up;    // K x N, real gains
  std::vector<std::vector<double>> h_down;  // K x N, real gains
  std::vector<std::complex<double>> h_an;   // N x N row-major self-interference
  std::vector<double> g_up;    // squared norm of h_up[i]
  std::vector<double> g_down;  // squared norm of h_down[i]
  double g_si = 0.0;           // squared Frobenius norm of h_an
  std::uint64_t digest = 0;    // content hash, used to assert scheme pairing
};

/// Decision variables for all K vehicles.
struct Allocation {
  std::vector<double> f;  // average CPU frequency [Hz]
  std::vector<double> p;  // uplink transmit power [W]
  std::vector<double> m;  // offloaded task bits
  std::vector<double> r;  // uplink rate [bits/s]

  std::size_t size() const { return p.size(); }
};

/// Everything derived from (config, channels, allocation): per-vehicle
/// times, energies, rates and energy efficiencies plus the aggregates.
struct EvalReport {
  std::vector<double> tau_up;     // uplink slot [s]
  std::vector<double> tau_down;   // downlink slot [s]
  std::vector<double> tau_lo;     // local computing time [s]
  std::vector<double> e_vn;       // uplink transmit energy [J]
  std::vector<double> e_lo;       // local computing energy [J]
  std::vector<double> e_eh;       // harvested energy, conservation-capped [J]
  std::vector<double> e_an;       // AN transmit energy during the slot [J]
  std::vector<double> rate_up;    // operating uplink rate [bits/s]
  std::vector<double> rate_down;  // downlink rate [bits/s]
  std::vector<double> ee;         // per-vehicle energy efficiency [bit/J]

  double avg_ee = 0.0;      // mean of ee
  double sum_tau_up = 0.0;  // total uplink time [s]
  // Fairness variances: population variance of the per-vehicle metric
  // normalized by its mean (squared coefficient of variation), so the
  // numbers compare across schemes with different absolute levels.
  double var_ee = 0.0;
  double var_tau_up = 0.0;
};

/// Residuals for one labeled constraint family; residual <= 0 is satisfied.
struct ConstraintSet {
  std::string label;
  std::vector<double> residuals;
  double scale = 1.0;  // magnitude used for the relative tolerance

  double worst() const;
};

struct ConstraintReport {
  std::vector<ConstraintSet> sets;
  double tol = 0.0;
  bool feasible = false;

  const ConstraintSet& find(const std::string& label) const;
  double max_scaled_residual() const;
};

}  // namespace vemec
