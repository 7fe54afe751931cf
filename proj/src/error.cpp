#include "agisos/error.hpp"

namespace agisos {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RaggedInput: return "RaggedInput";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::OddVertex: return "OddVertex";
    case ErrorCode::NegativeVertex: return "NegativeVertex";
    case ErrorCode::UnequalDegreeSums: return "UnequalDegreeSums";
    case ErrorCode::AffinelyDependent: return "AffinelyDependent";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotInAffineHull: return "NotInAffineHull";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::VertexMissing: return "VertexMissing";
    case ErrorCode::PointOutsideSimplex: return "PointOutsideSimplex";
    case ErrorCode::SumTooLarge: return "SumTooLarge";
    case ErrorCode::IsVertex: return "IsVertex";
    case ErrorCode::InsufficientFloorSum: return "InsufficientFloorSum";
    case ErrorCode::DepthExhausted: return "DepthExhausted";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::NotInSimplex: return "NotInSimplex";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::NotSos: return "NotSos";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
  }
  return "Unknown";
}

}  // namespace agisos
