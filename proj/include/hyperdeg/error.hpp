#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdeg {

enum class ErrorCode {
    ZeroInverse,
    InvertibleAssignedZero,
    UnassignedParameter,
    ModulusMismatch,
    ParamSpaceMismatch,
    NotPrime,
    UniverseMismatch,
    ZeroPolynomial,
    UnknownVariable,
    ParseError,
    NotUnivariate,
    UnspecializedParameter,
    NotHomogeneous,
    DegreeTooLargeForPrime,
    InvalidParams,
    IndexOutOfRange,
    EjTooSmall,
    EjExhausted,
    DivisionFailure,
    ParameterConflict,
    InvariantViolation,
    SamplingExhausted,
    OutOfContract,
    NonIntegralResult,
    NotFano,
    MissingTransferMap,
    RDivisibilityViolated,
    MalformedInput,
    Overflow,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure in the library is reported through this exception; `code()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace hyperdeg
