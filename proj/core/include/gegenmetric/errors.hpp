#pragma once

#include <stdexcept>
#include <string>

namespace gegenmetric {

// A caller-supplied value violates an operation's precondition
// (bad dimension, nonpositive coupling, unparseable input, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation hit a zero denominator.
class PoleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Exact division by the zero element of a field.
class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An elimination step met a vanishing pivot or failed to isolate a single
// unknown. Not expected for the lattice Hamiltonians.
class DegeneratePivotError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A numerical verdict fell inside the uncertainty band.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gegenmetric
