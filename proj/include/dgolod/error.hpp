#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgolod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (variable count or coefficient field).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition was violated (bad index, improper ideal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact division by a variable failed; `witness()` is a term that is not divisible.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// d^r was applied to an element with nonzero constant term.
class NonProperElement : public Error {
 public:
  using Error::Error;
};

/// A configurable step budget was exhausted.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A cycle construction met a unit entry in a resolution.
class NonMinimalResolution : public Error {
 public:
  using Error::Error;
};

/// Two independent decision procedures disagreed. Always an implementation bug.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The input is valid but outside what a routine supports (e.g. non-monomial).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in textual input, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dgolod
