#pragma once

#include <stdexcept>
#include <string>

namespace coxric {

// Malformed or out-of-domain user input (type strings, matrix files, graphs).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The bilinear form is exactly singular within tolerance (affine type).
class DegenerateTypeError : public InputError {
 public:
  using InputError::InputError;
};

// Numerical procedure failed to converge or lost consistency.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxric
