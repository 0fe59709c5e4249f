#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polaritylab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments to a constructor or operation (self-loops, bad indices,
/// overlapping partition blocks, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a brute-force or search bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number, 0 when the error is
/// not tied to a single line (e.g. a missing header).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace polaritylab
