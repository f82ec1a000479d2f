#pragma once

#include <stdexcept>
#include <string>

namespace cubic27 {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotMonic,
  NotSquarefree,
  RationalRootFound,
  DivisionByZero,
  FieldMismatch,
  CoincidentPoints,
  SkewLines,
  EqualLines,
  NonUniqueSolution,
  PostCheckFailed,
  NotOnSurface,
  NotIncident,
  DivisionFailed,
  DegenerateParameters,
  NotCoplanar,
  DuplicateLines,
  SingularMember,
  MissingParameter,
  UnknownParameter,
  DenominatorVanishes,
  UnknownFamily,
  UnknownLabel,
  InvalidExtendedLSet,
  ClosureViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cubic27
