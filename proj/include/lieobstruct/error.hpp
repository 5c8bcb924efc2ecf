#pragma once

#include <stdexcept>
#include <string>

namespace lieobstruct {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad ring parameters, non-alternating tensors, parse errors.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size guard or enumeration budget would be exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by theory failed; indicates a bug or a broken lift.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lieobstruct
