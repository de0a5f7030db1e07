#pragma once

#include <stdexcept>
#include <string>

namespace noma_shield {

/// Invalid configuration or experiment specification. Messages name the
/// offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure during a computation (as opposed to bad input).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The stacked channel matrix has an empty numerical null space, so no
/// alignment vector exists.
class AlignmentError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The pair matrix is too ill-conditioned to invert reliably; callers may
/// resample the channels.
class IllConditionedGeometryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace noma_shield
