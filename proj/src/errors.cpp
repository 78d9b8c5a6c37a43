#include "tpgabor/errors.hpp"

namespace tpgabor {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroDelta: return "ZeroDelta";
    case ErrorCode::TooFewPoles: return "TooFewPoles";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::RepeatedPoles: return "RepeatedPoles";
    case ErrorCode::PoleOnTorus: return "PoleOnTorus";
    case ErrorCode::MultiplicityTooHigh: return "MultiplicityTooHigh";
    case ErrorCode::ZeroNotResolved: return "ZeroNotResolved";
    case ErrorCode::DivisibilityError: return "DivisibilityError";
    case ErrorCode::DensityError: return "DensityError";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::LeftInverseResidual: return "LeftInverseResidual";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

} // namespace tpgabor
