#pragma once

#include <stdexcept>
#include <string>

namespace jsyz {

/// Malformed or unsupported user input (exit code 1 at the CLI).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed: a bound was not reached, two exact routes
/// disagree in a way that cannot be reported as a check, or a modular rank
/// could not be confirmed over the rationals (exit code 3 at the CLI).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jsyz
