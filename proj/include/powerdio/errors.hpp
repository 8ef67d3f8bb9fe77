#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerdio {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial or power-sum text. offset() is a 0-based byte index.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        message_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

/// A power-sum specification that violates its construction invariants.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Standard-pair parameters outside the kind's side conditions.
class SideConditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace powerdio
