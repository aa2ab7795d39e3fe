#pragma once

#include <iosfwd>
#include <string>

#include "vemec/types.hpp"

namespace vemec {

/// Parses a key = value config file. Keys mirror the simulation parameter
/// names (K, N, B, T, C, kappa, alpha, beta, p_an, p_min, p_max, f_max,
/// sigma2_an, sigma2_vn, sigma2_ps, M, rate_cap_mode, seed). '#' starts a
/// comment. M accepts either one value, broadcast to all K vehicles, or a
/// comma-separated list of length K. Unknown keys are a hard error.
SystemConfig load_config_file(const std::string& path);

/// Same parser, reading from an in-memory string (used by tests).
SystemConfig parse_config(const std::string& text, const std::string& origin = "<string>");

/// Writes every resolved parameter in config-file syntax.
void echo_config(const SystemConfig& cfg, std::ostream& os);

std::string format_double(double v);  // full-precision scientific, round-trip safe

}  // namespace vemec
