#pragma once

#include <stdexcept>
#include <string>

namespace rhocalc {

// Bad input: malformed arguments, failed precondition, inconsistent tables.
// The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-posed computation that could not finish (quadrature did not
// converge, search exceeded its cap). The CLI maps these to exit code 2.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rhocalc
