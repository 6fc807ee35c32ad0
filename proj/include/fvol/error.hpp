#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fvol {

enum class ErrorKind {
  DivisionByZero,
  RingMismatch,
  Overflow,
  BadInput,
  NonPrime,
  Syntax,
  UnknownVariable,
  BadLevel,
  BudgetExceeded,
  HypothesisViolated,
  NotPrimary,
  LimitExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A failure tied to a position in some input text. `offset` is a byte offset
// into the text that was being parsed.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t offset)
      : Error(kind, message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fvol
