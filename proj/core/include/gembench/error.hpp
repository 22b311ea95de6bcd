#pragma once

#include <stdexcept>
#include <string>

namespace gembench {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge lists, manifests, configs, CSV tables).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// A value violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A node id, dimension or count is outside its admissible range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values, divergence or failure to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A generator cannot place the requested number of distinct edges.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gembench
