#pragma once

#include <stdexcept>
#include <string>

namespace enclave {

/// Raised when an input exceeds a configured brute-force or width limit.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A move that is not legal in the current position.
class illegal_move : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scripted strategy chose an illegal vertex, or was run on a graph it
/// cannot address.
class strategy_fault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when not line oriented.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace enclave
