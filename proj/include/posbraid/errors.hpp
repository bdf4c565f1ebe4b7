#pragma once

#include <stdexcept>
#include <string>

namespace posbraid {

/// Malformed or out-of-contract input (bad braid text, split word where a
/// nonsplit one is required, non-symmetric matrix, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that holds by construction was violated. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Root refinement did not reach a decidable state.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace posbraid
