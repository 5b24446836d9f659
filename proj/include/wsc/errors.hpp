#pragma once

#include <stdexcept>
#include <string>

namespace wsc {

// Every failure mode surfaced by the library carries one of these codes.
// The CLI maps them to stable process exit codes, so the numeric values
// are part of the external contract and must not be reordered.
enum class ErrorCode {
    Generic = 1,
    AtypicalWeight = 10,
    OddDimensionalOddPart = 11,
    NonIntegralDivision = 12,
    InexactDivision = 13,
    DivergentDirection = 14,
    NotDominant = 15,
    UnsupportedFamily = 16,
    InvalidPartition = 17,
    NotComparable = 18,
    GroupTooLarge = 19,
    SizeMismatch = 20,
    NotCentral = 21,
    NilpotentNotInLevi = 22,
    ParseError = 23,
    NotTypeI = 24,
    SingularWeight = 25,
    NonIntegralGrading = 26,
    NotIntegral = 27,
    NonIntegralTheta = 28,
    OrbitSizeRequired = 29,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace wsc
