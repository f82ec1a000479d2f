#include "cubic27/error.hpp"

namespace cubic27 {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::RationalRootFound: return "RationalRootFound";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SkewLines: return "SkewLines";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::PostCheckFailed: return "PostCheckFailed";
    case ErrorCode::NotOnSurface: return "NotOnSurface";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::DivisionFailed: return "DivisionFailed";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NotCoplanar: return "NotCoplanar";
    case ErrorCode::DuplicateLines: return "DuplicateLines";
    case ErrorCode::SingularMember: return "SingularMember";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::UnknownParameter: return "UnknownParameter";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidExtendedLSet: return "InvalidExtendedLSet";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

}  // namespace cubic27
