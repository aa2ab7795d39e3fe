#pragma once

#include "vemec/types.hpp"

namespace vemec {

inline constexpr double kDefaultConstraintTol = 1e-8;

/// Computes every per-vehicle time, energy, rate and energy efficiency plus
/// the aggregates. Uses the allocation's CPU frequency as given; run
/// eliminate_frequency first when the closed-form frequency is wanted.
EvalReport evaluate(const SystemConfig& cfg, const ChannelSet& ch, const Allocation& a);

/// Emits labeled residuals (residual <= 0 means satisfied) for the full
/// constraint system: per-vehicle energy balance C1/C2, variable boxes
/// C3-C6, local-compute deadline C7, downlink/uplink pipelining C8, the
/// frame budgets C9/C10 and every prefix-uplink + suffix-downlink budget
/// C11. A constraint counts as satisfied when its residual is below
/// max(1e-12, tol * max(1, scale)).
ConstraintReport evaluate_constraints(const SystemConfig& cfg, const ChannelSet& ch,
                                      const Allocation& a,
                                      double tol = kDefaultConstraintTol);

}  // namespace vemec
