#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rp2 {

// Caller supplied something outside an operation's contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A named hypothesis of a construction does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Exact enumeration would exceed its configured limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal self-check failed. Always a bug, never a property of the input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rp2
