#pragma once

#include <stdexcept>
#include <string>

namespace depolqfi {

// A parameter lies outside the domain of the requested operation. The
// message names the violated bound.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense representation would exceed the configured dimension cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An iterative numerical routine failed to converge.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// A 2x2 block had a negative eigenvalue beyond rounding tolerance.
class PositivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A gain was requested where its denominator vanishes.
class UndefinedGainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace depolqfi
