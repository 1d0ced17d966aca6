#pragma once

#include <stdexcept>
#include <string>

namespace pit {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments or inputs (bad dimensions, out-of-range indices, ...).
struct UsageError : Error {
  using Error::Error;
};

// A size cap was exceeded (expansion too large, exhaustive search too big).
struct SizeLimitError : Error {
  using Error::Error;
};

// A declared promise of the input does not hold (e.g. a factor promised
// invertible has identically zero determinant).
struct PromiseViolation : Error {
  using Error::Error;
};

// The input falls outside the circuit class an operation requires
// (e.g. more distinct induced partitions than allowed).
struct ClassViolation : Error {
  using Error::Error;
};

// A text input failed to parse; carries 1-based line and column.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& what, int line_, int col_)
      : Error("parse error at line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

}  // namespace pit
