#pragma once

#include <stdexcept>
#include <string>

namespace fracvar {

/// Argument outside the mathematical domain of an operation (orders, Gamma arguments, exponents).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem hypothesis required by the requested computation does not hold.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: configs, lengths, precondition violations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The discretization is too coarse to honor a continuum guarantee.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracvar
