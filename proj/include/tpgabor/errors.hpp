#pragma once

#include <stdexcept>
#include <string>

namespace tpgabor {

/// Machine-readable failure codes, one per distinct failure mode.
enum class ErrorCode {
    ZeroDelta,
    TooFewPoles,
    NonpositiveScale,
    RepeatedPoles,
    PoleOnTorus,
    MultiplicityTooHigh,
    ZeroNotResolved,
    DivisibilityError,
    DensityError,
    RankDeficient,
    LeftInverseResidual,
    LengthMismatch,
    ShapeMismatch,
    InvalidArgument,
    UsageError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tpgabor
