#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvemul {

enum class ErrorCode {
    // torus algebra
    InvalidClass,
    InvalidExponent,
    NotSimpleLoop,
    Overflow,
    // scenes
    DanglingHalfEdge,
    NonAlternatingCrossing,
    NonCellular,
    NonOrientableOrCorrupt,
    UnknownCurve,
    BigonPresent,
    ComponentHasCrossings,
    SelfCrossingCurve,
    MultiComponentCurve,
    InvalidCount,
    ParallelSlopes,
    TriplePoint,
    MissingMarkers,
    // pants decompositions and coordinates
    SlotReuse,
    UnknownSlot,
    CountMismatch,
    ParityViolation,
    NegativeTwistOnMissedCurve,
    NegativeIntersection,
    UnknownCurveIndex,
    TwistOnMissedCurve,
    IntersectionMismatch,
    MissedCurveTwistMismatch,
    // harness and I/O
    InvalidBound,
    MalformedInput,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so callers
/// (and the Python bindings) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace curvemul
