#pragma once

#include <stdexcept>
#include <string>

namespace geodiscord {

/// Operands whose shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix or parameter set violates a physical-state invariant
/// (Hermiticity, unit trace, positivity, normalization, ...).
class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure could not reach its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geodiscord
