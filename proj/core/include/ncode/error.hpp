#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncode {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A code violates its invariants (duplicate codewords, bits above n, n out of range).
class InvalidCode : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  explicit ParseError(const std::string& message) : ParseError(0, message) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidRealization : public Error {
 public:
  using Error::Error;
};

/// An operation was handed a realization of the wrong mode.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration was asked to exceed its configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Stage arities of a code map do not line up, or a map does not fit its input code.
class ArityError : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// Ring elements or endomorphisms built over rings of different dimension.
class CodeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidEndomorphism : public Error {
 public:
  using Error::Error;
};

}  // namespace ncode
