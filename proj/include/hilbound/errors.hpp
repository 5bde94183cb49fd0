#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbound {

// Bad user input: malformed text, gcd != 1, generator not in the ring,
// unit ideal where a proper one is required, ... (CLI exit code 2).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error with a byte offset into the offending text.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A window/fit did not settle: enlarge N or max_power (CLI exit code 3).
class window_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two redundant computations disagreed. Never masked, never "resolved".
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hilbound
