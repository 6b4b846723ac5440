#pragma once

#include <stdexcept>
#include <string>

namespace qmckay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported or malformed group / root-system parameters.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (bad exponent, constant term,
/// zero class, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be an exact integer (or a structural identity) failed
/// to come out that way.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A tan pole was hit while evaluating the orbifold potential.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmckay
