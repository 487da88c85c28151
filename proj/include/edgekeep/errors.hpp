#pragma once

#include <stdexcept>
#include <string>

namespace edgekeep {

// A caller-side contract was violated (bad vertex id, unmet hypothesis, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run above its configured size bound.
class limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed text input. line() is 1-based, or 0 when the error has no line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace edgekeep
