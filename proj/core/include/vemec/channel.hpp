#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vemec/types.hpp"

namespace vemec {

/// Draws one channel realization. Uplink and downlink entries are i.i.d.
/// uniform on [0.5, 1]; self-interference entries are circularly symmetric
/// complex Gaussian with total variance 0.1. The RNG stream is derived
/// deterministically from (cfg.seed, trial_index); identical arguments give
/// a bit-identical ChannelSet.
///
/// Draw order: h_up vehicle-major, then h_down vehicle-major, then the
/// self-interference matrix row-major (real part before imaginary part).
ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t trial_index);

/// Builds a ChannelSet from explicit vectors and computes the derived
/// gains; used by tests that pin channels by hand.
ChannelSet make_channel_set(std::vector<std::vector<double>> h_up,
                            std::vector<std::vector<double>> h_down,
                            std::vector<std::complex<double>> h_an);

/// FNV-1a over the raw channel bytes; identifies a realization.
std::uint64_t channel_digest(const ChannelSet& ch);

}  // namespace vemec
