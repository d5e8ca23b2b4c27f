#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qk {

enum class ErrorKind {
  // construction
  NotAPartialOrder,
  NotALattice,
  MissingBound,
  TooLarge,
  InvalidArgument,
  // ideal theory
  NotCommutative,
  EmptyGeneratorSet,
  CarrierMismatch,
  HomInvalid,
  HomRequired,
  NotProper,
  NotPrime,
  NotPrimary,
  NotMc,
  NoAvoidingIdeal,
  HypothesisViolated,
  Degenerate,
  NotDecomposable,
  InvalidDecomposition,
  ContractViolation,
  // input
  SyntaxError,
  UndeclaredLabel,
  DuplicateLabel,
  RowArity,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Source location in a text input, 1-based.
struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t length = 0;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourceSpan span, const std::string& message)
      : Error(kind, "line " + std::to_string(span.line) + ", column " + std::to_string(span.column) + ": " +
                        message),
        span_(span) {}

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace qk
