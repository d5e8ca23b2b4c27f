#include "qk/error.hpp"

namespace qk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::MissingBound: return "MissingBound";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::HomInvalid: return "HomInvalid";
    case ErrorKind::HomRequired: return "HomRequired";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::NotMc: return "NotMc";
    case ErrorKind::NoAvoidingIdeal: return "NoAvoidingIdeal";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredLabel: return "UndeclaredLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::RowArity: return "RowArity";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace qk
