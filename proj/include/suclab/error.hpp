#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suclab {

/// Malformed external input (graph6 records, partition JSON, edge lists).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical claim checked at runtime did not hold. Always a bug or a
/// counterexample worth reporting; never a user error.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace suclab
