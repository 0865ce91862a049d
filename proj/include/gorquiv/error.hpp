#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorquiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed DSL or JSON input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that does not describe a valid object (unknown ids,
// non-composable words, infinite-dimensional algebras, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed, or a guaranteed step failed. Never
// expected; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A resource guard tripped. This is not a semantic answer.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace gorquiv
