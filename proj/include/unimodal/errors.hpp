#pragma once

#include <stdexcept>
#include <string>

namespace unimodal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented range of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace unimodal
