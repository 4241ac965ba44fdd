#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodetic {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input violates a structural precondition (self-loop, disconnected, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Random graph generation exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Instance is outside what an algorithm agrees to handle (e.g. too large).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Unreachable on valid inputs.
class AlgorithmError : public Error {
 public:
  using Error::Error;
};

}  // namespace geodetic
