#include "qhcurve/errors.hpp"

namespace qhcurve {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonUnitDenominator: return "NonUnitDenominator";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::OrderTooLow: return "OrderTooLow";
        case ErrorCode::NoStabilization: return "NoStabilization";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::BoxExceedsModuli: return "BoxExceedsModuli";
        case ErrorCode::NoNonZeroDivisor: return "NoNonZeroDivisor";
        case ErrorCode::NotContained: return "NotContained";
        case ErrorCode::ContainmentViolation: return "ContainmentViolation";
        case ErrorCode::NoEquations: return "NoEquations";
        case ErrorCode::EquationsFailVerification: return "EquationsFailVerification";
        case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace qhcurve
