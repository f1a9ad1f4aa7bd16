#pragma once

#include <stdexcept>
#include <string>

namespace oscylinder {

/// Argument outside the domain of an operation (z on the branch cut, r < a, omega <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision (unscaled Bessel value under/overflow).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Finite-difference stencil would leave the fluid domain, or the step is not positive.
class StepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search (e.g. the recovery radius) did not meet its criterion within its range.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscylinder
