#include "wsc/errors.hpp"

namespace wsc {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Generic: return "Generic";
        case ErrorCode::AtypicalWeight: return "AtypicalWeight";
        case ErrorCode::OddDimensionalOddPart: return "OddDimensionalOddPart";
        case ErrorCode::NonIntegralDivision: return "NonIntegralDivision";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::DivergentDirection: return "DivergentDirection";
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::NotComparable: return "NotComparable";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotCentral: return "NotCentral";
        case ErrorCode::NilpotentNotInLevi: return "NilpotentNotInLevi";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotTypeI: return "NotTypeI";
        case ErrorCode::SingularWeight: return "SingularWeight";
        case ErrorCode::NonIntegralGrading: return "NonIntegralGrading";
        case ErrorCode::NotIntegral: return "NotIntegral";
        case ErrorCode::NonIntegralTheta: return "NonIntegralTheta";
        case ErrorCode::OrbitSizeRequired: return "OrbitSizeRequired";
    }
    return "Generic";
}

} // namespace wsc
