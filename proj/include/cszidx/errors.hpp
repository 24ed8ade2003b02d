#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cszidx {

// Raised when an operation is called outside the hypotheses it is defined for.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace cszidx
