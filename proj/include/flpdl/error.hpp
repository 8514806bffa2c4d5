#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flpdl {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file, URI, or command argument.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownConstant : public InputError {
 public:
  using InputError::InputError;
};

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class AtomBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace flpdl
