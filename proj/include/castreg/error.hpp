// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace castreg {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  OrderOverflow,
  DivisionByZero,
  FieldMismatch,
  ZeroVector,
  DuplicatePoint,
  Degenerate,
  IndexOutOfRange,
  Exhausted,
  BadConstraint,
  TooLarge,
  NotSemiUniform,
  PreconditionFailed,
  ConstructionStuck,
  BadParams,
  DuplicateParam,
  FieldTooSmall,
  RetriesExhausted,
  NotSpanning,
  EmptySection,
  TooFew,
  FrameNotFound,
  SyntaxError,
  SemanticError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text parsers; carries a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + " col " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace castreg
