#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vemec/nlp.hpp"
#include "vemec/types.hpp"

namespace vemec {

enum class Block { kPower, kTask, kRate };

std::string to_string(Block b);

struct AiisOptions {
  double eps_converge = 1e-6;  // relative change of the average EE
  int max_alternations = 50;
  std::vector<Block> block_order = {Block::kPower, Block::kTask, Block::kRate};
  std::optional<Allocation> initial_allocation;  // midpoint default when absent
  bool jacobi = false;  // update all blocks against the alternation-start point
  SolverOptions solver;
};

struct AiisTrace {
  struct Alternation {
    double objective = 0.0;  // average EE after the alternation
    std::vector<bool> block_accepted;
    double max_scaled_residual = 0.0;
  };
  std::vector<Alternation> alternations;
  bool converged = false;
  int alternation_count = 0;
};

struct AiisResult {
  Allocation allocation;
  AiisTrace trace;
  EvalReport report;
};

/// Which decision variables a subproblem may move; frozen variables are
/// captured constants.
struct BlockMask {
  bool p = false;
  bool m = false;
  bool r = false;
};

/// A packed, scaled NLP over the masked variables. Variables are scaled to
/// order one (p by p_max, m by M_i, r by the rate cap at p_max), the
/// objective is the average energy efficiency normalized by its value at
/// the starting point, and the remaining constraints are normalized by
/// their natural magnitudes. Constraints that reduce to variable bounds
/// under the mask (rate cap with fixed rate or power, frequency bound with
/// fixed task split or rate) are folded into the box.
struct BlockProblem {
  NlpProblem problem;
  std::vector<double> x0;
  std::function<Allocation(const std::vector<double>&)> decode;  // applies frequency elimination
};

BlockProblem build_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                              const Allocation& alloc, BlockMask mask);

/// Sets f_i to the closed-form energy-minimal frequency C*(M_i - m_i) /
/// tau_up_i, under which the local compute time equals the uplink slot.
Allocation eliminate_frequency(const SystemConfig& cfg, const Allocation& alloc);

/// Interior-point solve of one coordinate block, other blocks fixed. The
/// result is kept only when it does not lower the average EE (monotone
/// safeguard); otherwise the input allocation is returned unchanged.
Allocation solve_block_p(const SystemConfig& cfg, const ChannelSet& ch, const Allocation& a,
                         const SolverOptions& opts = {});
Allocation solve_block_m(const SystemConfig& cfg, const ChannelSet& ch, const Allocation& a,
                         const SolverOptions& opts = {});
Allocation solve_block_r(const SystemConfig& cfg, const ChannelSet& ch, const Allocation& a,
                         const SolverOptions& opts = {});

/// Midpoint starting allocation: p at the box center, half the task bits
/// offloaded, rate at half its cap; frequency eliminated, no repair.
Allocation default_initial_allocation(const SystemConfig& cfg, const ChannelSet& ch);

/// Midpoint allocation plus a joint phase-I repair when it is infeasible.
/// This is the shared starting point all schemes consume.
Allocation prepare_initial_allocation(const SystemConfig& cfg, const ChannelSet& ch);

/// Repairs an allocation to a strictly interior point over the masked
/// variables; returns it unchanged when already interior.
Allocation repair_allocation(const SystemConfig& cfg, const ChannelSet& ch,
                             const Allocation& alloc, BlockMask mask);

/// Closed-form frequency elimination followed by safeguarded alternating
/// block solves until the average EE stabilizes.
AiisResult run_aiis(const SystemConfig& cfg, const ChannelSet& ch, const AiisOptions& opts = {});

namespace detail {
/// Alternation engine shared by the full scheme and the reduced-block
/// baselines; `blocks` need not be a full permutation.
AiisResult run_alternation(const SystemConfig& cfg, const ChannelSet& ch,
                           const Allocation& init, const std::vector<Block>& blocks,
                           const AiisOptions& opts);
}  // namespace detail

}  // namespace vemec
