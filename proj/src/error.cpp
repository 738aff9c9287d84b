#include "curvemul/error.hpp"

namespace curvemul {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidClass: return "InvalidClass";
        case ErrorCode::InvalidExponent: return "InvalidExponent";
        case ErrorCode::NotSimpleLoop: return "NotSimpleLoop";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
        case ErrorCode::NonAlternatingCrossing: return "NonAlternatingCrossing";
        case ErrorCode::NonCellular: return "NonCellular";
        case ErrorCode::NonOrientableOrCorrupt: return "NonOrientableOrCorrupt";
        case ErrorCode::UnknownCurve: return "UnknownCurve";
        case ErrorCode::BigonPresent: return "BigonPresent";
        case ErrorCode::ComponentHasCrossings: return "ComponentHasCrossings";
        case ErrorCode::SelfCrossingCurve: return "SelfCrossingCurve";
        case ErrorCode::MultiComponentCurve: return "MultiComponentCurve";
        case ErrorCode::InvalidCount: return "InvalidCount";
        case ErrorCode::ParallelSlopes: return "ParallelSlopes";
        case ErrorCode::TriplePoint: return "TriplePoint";
        case ErrorCode::MissingMarkers: return "MissingMarkers";
        case ErrorCode::SlotReuse: return "SlotReuse";
        case ErrorCode::UnknownSlot: return "UnknownSlot";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::NegativeTwistOnMissedCurve: return "NegativeTwistOnMissedCurve";
        case ErrorCode::NegativeIntersection: return "NegativeIntersection";
        case ErrorCode::UnknownCurveIndex: return "UnknownCurveIndex";
        case ErrorCode::TwistOnMissedCurve: return "TwistOnMissedCurve";
        case ErrorCode::IntersectionMismatch: return "IntersectionMismatch";
        case ErrorCode::MissedCurveTwistMismatch: return "MissedCurveTwistMismatch";
        case ErrorCode::InvalidBound: return "InvalidBound";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace curvemul
