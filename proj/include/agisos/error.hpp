#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agisos {

enum class ErrorCode {
  InvalidArgument,
  RaggedInput,
  TooFewVertices,
  OddVertex,
  NegativeVertex,
  UnequalDegreeSums,
  AffinelyDependent,
  DuplicateVertex,
  NotInAffineHull,
  BudgetExceeded,
  Overflow,
  ArityMismatch,
  VertexMissing,
  PointOutsideSimplex,
  SumTooLarge,
  IsVertex,
  InsufficientFloorSum,
  DepthExhausted,
  InternalInvariantViolation,
  KTooSmall,
  NotInSimplex,
  NonpositiveScale,
  NotSos,
  DecompositionFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code is stable and
/// maps onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace agisos
