#pragma once

#include <stdexcept>
#include <string>

namespace adjc {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed in something outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input has the wrong shape, e.g. a root set that is not a closed subsystem.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A covector pairs to zero with some root; the line action has
/// positive-dimensional fixed loci.
class NonGenericCovector : public Error {
 public:
  using Error::Error;
};

/// Localization was asked to evaluate on a pole hyperplane.
class PoleEncountered : public Error {
 public:
  using Error::Error;
};

/// An internal invariant broke. Never expected to fire.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace adjc
