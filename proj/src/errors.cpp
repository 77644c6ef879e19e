#include "multitri/errors.hpp"

namespace multitri {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EdgeTooLong: return "EdgeTooLong";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotRelevant: return "NotRelevant";
    case ErrorCode::NotInTriangulation: return "NotInTriangulation";
    case ErrorCode::LengthPrecondition: return "LengthPrecondition";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::MalformedShape: return "MalformedShape";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

void raise(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace multitri
