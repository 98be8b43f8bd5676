#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsparse {

// Bad ids, malformed sets, trivial partitions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that failed to parse; carries 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Exhaustive routines refuse instances above their configured limits.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of a stateful operation was not met.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Broken internal bookkeeping. Should never fire.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hsparse
