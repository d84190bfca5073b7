#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mzv {

/// Input outside an operation's domain (malformed index, q outside (0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested series is not known to converge (non-admissible index on a
/// side that needs one).
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mzv
