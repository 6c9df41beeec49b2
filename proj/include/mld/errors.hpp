#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mld {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when an ideal expected to be zero-dimensional is not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input the algorithms do not handle (e.g. non-isolated singularities).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Every random draw was rejected; the answer could not be certified.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// A theorem-level consistency check failed, e.g. a non-integral quotient.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mld
