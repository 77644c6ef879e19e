#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multitri {

enum class ErrorCode {
  InvalidInput,
  EdgeTooLong,
  TooLarge,
  StructureViolation,
  NotRelevant,
  NotInTriangulation,
  LengthPrecondition,
  NotPeriodic,
  MalformedShape,
  ShapeMismatch,
};

std::string_view error_name(ErrorCode code);

/// Every library failure is reported through this type; `code()` is the
/// machine-readable kind and `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail);

}  // namespace multitri
