#pragma once

#include <stdexcept>
#include <string>

namespace g2s6 {

/// Precondition violated by the caller (bad shape, non-Hermitian input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction did not. Indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Iterative numerics did not reach tolerance (optimizer, degenerate pivot).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace g2s6
