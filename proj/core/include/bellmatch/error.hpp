#pragma once

#include <stdexcept>
#include <string>

namespace bellmatch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (length mismatch, empty list,
/// non-finite angle, incompatible runs, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace bellmatch
