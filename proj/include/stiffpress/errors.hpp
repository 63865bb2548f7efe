#pragma once

#include <stdexcept>
#include <string>

namespace stiffpress {

/// Invalid configuration value or document. `key()` names the offending key
/// when one is known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Field length does not match the grid it is used with.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller passed an unsupported argument (e.g. a norm exponent).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite or otherwise unusable input data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state invariant (0 <= u <= K, pressure law, ...) does not hold.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unrecoverable numerical failure (solver breakdown, too many rejections).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A single time step was rejected; the caller may retry with dt/2.
class StepRejected : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace stiffpress
