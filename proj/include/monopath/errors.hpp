#pragma once

#include <stdexcept>
#include <string>

namespace monopath {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed a configured budget (digits, work,
// vertex count).  Callers may catch it and degrade to a bounded answer.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", field '" + field +
                           "': " + message),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace monopath
