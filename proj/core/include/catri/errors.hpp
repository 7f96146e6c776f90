#pragma once

#include <stdexcept>
#include <string>

namespace catri {

// An argument lies outside the mathematical domain of a function
// (negative binomial top, k > m for a triangle entry, n = 0 for H_n...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal consistency check failed: a non-exact division inside a
// triangle computation, a corrupt checkpoint, a schema-version mismatch.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller asked for something that cannot be run as stated: an empty
// sweep domain, an even exponent, a missing range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentityError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Parameter assignment violates an identity's stated hypotheses.
class ConstraintViolation : public UsageError {
 public:
  using UsageError::UsageError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catri
