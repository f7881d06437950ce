#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedpi {

enum class ErrorCode {
  InvalidField,
  DivisionByZero,
  NotPresent,
  UnknownName,
  CubeRootMissing,
  AntisymmetryViolation,
  JacobiViolation,
  GradingViolation,
  NotClosed,
  ParseError,
  BudgetExceeded,
  NotMonolithic,
  CapExceeded,
  GradeMismatch,
  UnknownFamily,
  NonPositiveExponent,
  ProfileMismatch,
  CellMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above; callers
// that need to branch (the CLI, tests) switch on code() rather than on text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gradedpi
