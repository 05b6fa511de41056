#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motivic {

// Every failure the library reports. The CLI prints the name as the
// "error" field of its structured error object.
enum class ErrorKind {
  DivisionByZero,
  PoleAtOne,
  PoleAtQ,
  DivergentSeries,
  VariableMismatch,
  NonUnitConstantTerm,
  PositiveOrderRequired,
  NotOrderOne,
  NoRootInField,
  NotLaurentPolynomial,
  NonUnitLeadingTerm,
  NonPositiveOrderValue,
  PrecisionExhausted,
  CoincidentBranches,
  DegenerateBranch,
  EquationDoesNotVanish,
  HypothesisViolated,
  StalledIteration,
  NoSuitableRotation,
  IndexOutOfRange,
  NotCoprime,
  TooLarge,
  NotEnumerable,
  SingularMatrix,
  NonPositiveDegree,
  InvalidInput,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace motivic
