#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eplab {

/// Malformed or out-of-contract input (non-finite entries, non-square
/// operand, non-orthonormal basis, invalid rank, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes that cannot be combined.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// A decision procedure was asked about inputs outside its hypotheses.
class InapplicableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Angle requested for a trivial subspace.
class UndefinedAngleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// CMAT text could not be parsed; line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eplab
