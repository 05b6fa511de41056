#include "motivic/error.hpp"

namespace motivic {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::PoleAtQ: return "PoleAtQ";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::PositiveOrderRequired: return "PositiveOrderRequired";
    case ErrorKind::NotOrderOne: return "NotOrderOne";
    case ErrorKind::NoRootInField: return "NoRootInField";
    case ErrorKind::NotLaurentPolynomial: return "NotLaurentPolynomial";
    case ErrorKind::NonUnitLeadingTerm: return "NonUnitLeadingTerm";
    case ErrorKind::NonPositiveOrderValue: return "NonPositiveOrderValue";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::CoincidentBranches: return "CoincidentBranches";
    case ErrorKind::DegenerateBranch: return "DegenerateBranch";
    case ErrorKind::EquationDoesNotVanish: return "EquationDoesNotVanish";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::StalledIteration: return "StalledIteration";
    case ErrorKind::NoSuitableRotation: return "NoSuitableRotation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace motivic
