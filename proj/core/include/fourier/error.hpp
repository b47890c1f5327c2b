#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fourier {

enum class ErrorCode {
  DivisionByZero,
  NegativeRadicand,
  NotReal,
  PrecisionExhausted,
  RankMismatch,
  AmbiguousPairing,
  NonpositiveFirstColumn,
  NotClosedUnderConjugation,
  InvalidFirstColumn,
  IrrationalDegree,
  IrrationalNorm,
  NonpositiveDegree,
  FourierAxiomsFailed,
  CAlgebraAxiomsFailed,
  NotSelfDual,
  IntegralityFailed,
  HypothesisNotMet,
  DominanceFailed,
  NotClosed,
  NonIntegerDegree,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is
/// stable and is what the CLI and tests dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::ParseError,
              source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fourier
