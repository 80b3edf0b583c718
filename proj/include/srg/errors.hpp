#pragma once

#include <stdexcept>
#include <string>

namespace srg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex, edge or parameter label that is not part of the universe it was
/// looked up in.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (empty parameter set, label
/// collision in a join, disconnected host for the diameter relation, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A constructed value failed one of its own structural invariants. Seeing
/// this means a bug in the library, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace srg
