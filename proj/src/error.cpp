#include "gradedpi/error.hpp"

namespace gradedpi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPresent: return "NotPresent";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CubeRootMissing: return "CubeRootMissing";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::GradingViolation: return "GradingViolation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotMonolithic: return "NotMonolithic";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::GradeMismatch: return "GradeMismatch";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::CellMismatch: return "CellMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace gradedpi
