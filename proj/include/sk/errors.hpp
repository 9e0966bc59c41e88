#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sk {

/// Numerical failure inside a solver or integrator (singular system,
/// quadrature floor, broken positivity, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model violated the eigenvalue floor or produced a non-finite
/// coefficient on its domain box.
class AssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an expression or config file. `offset` is the byte
/// position into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::ptrdiff_t offset)
      : std::runtime_error(msg), offset_(offset) {}
  std::ptrdiff_t offset() const { return offset_; }

 private:
  std::ptrdiff_t offset_;
};

/// Domain error while evaluating an expression (log of a non-positive
/// value, division by zero, ...). `offset` locates the sub-expression,
/// or is -1 for programmatically built trees.
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& msg, std::ptrdiff_t offset)
      : std::runtime_error(msg), offset_(offset) {}
  std::ptrdiff_t offset() const { return offset_; }

 private:
  std::ptrdiff_t offset_;
};

}  // namespace sk
