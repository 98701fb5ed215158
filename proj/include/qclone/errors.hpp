#pragma once

#include <stdexcept>
#include <string>

namespace qclone {

/// Precondition violated by the caller (e.g. a non-Hermitian matrix).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain where the model is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix that should be a density operator has a negative eigenvalue
/// below the roundoff floor.
class InvalidStateError : public DomainError {
 public:
  InvalidStateError(const std::string& what, double min_eigenvalue)
      : DomainError(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// An iterative routine failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qclone
