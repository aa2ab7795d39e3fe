#pragma once

#include <stdexcept>
#include <string>

namespace vemec {

/// Base class for all vemec errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad or inconsistent SystemConfig / config file contents.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Allocation that divides by a zero rate or similar limit violation.
class DegenerateAllocationError : public Error {
 public:
  using Error::Error;
};

/// Local compute demanded with no uplink time to overlap it.
class InfeasibleLocalComputeError : public Error {
 public:
  using Error::Error;
};

/// Closed-form CPU frequency exceeds the configured maximum.
class FrequencyBoundError : public Error {
 public:
  using Error::Error;
};

/// Phase-I could not reach a strictly interior point.
class InfeasibleStartError : public Error {
 public:
  using Error::Error;
};

}  // namespace vemec
