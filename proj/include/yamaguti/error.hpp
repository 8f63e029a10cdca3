#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yamaguti {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A structure was handed to an operation whose precondition it fails
/// (a non-Lie input to ly_from_lie, a failing operator, a dependent basis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two structure-constant entries disagree, e.g. [e1,e2] and [e2,e1] given
/// with values that are not negatives of each other.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// A document is syntactically valid but does not have the expected
/// fields or value types.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Malformed document text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace yamaguti
