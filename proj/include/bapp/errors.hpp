#pragma once

#include <stdexcept>
#include <string>

namespace bapp {

/// Raised when an argument falls outside the domain of an operation
/// (non-finite probability, alpha <= 0, malformed distribution, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a belief update is asked to condition on an outcome that has
/// zero probability under the current belief.
class InconsistentObservation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for cells outside the grid or outside a planning mask.
class OutOfBounds : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Scenario or policy misconfiguration detected before a mission starts.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bapp
