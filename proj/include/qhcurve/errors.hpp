#ifndef QHCURVE_ERRORS_HPP
#define QHCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhcurve {

enum class ErrorCode {
    NonUnitDenominator,
    NotInvertible,
    OrderTooLow,
    NoStabilization,
    DegenerateInput,
    BoxExceedsModuli,
    NoNonZeroDivisor,
    NotContained,
    ContainmentViolation,
    NoEquations,
    EquationsFailVerification,
    CriteriaDisagree,
    SchemaError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Input errors (malformed curve files) map to a different CLI exit status.
inline bool is_input_error(ErrorCode code) {
    return code == ErrorCode::SchemaError || code == ErrorCode::NonUnitDenominator ||
           code == ErrorCode::InvalidArgument;
}

}  // namespace qhcurve

#endif  // QHCURVE_ERRORS_HPP
