#include "hyperdeg/error.hpp"

namespace hyperdeg {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::InvertibleAssignedZero: return "InvertibleAssignedZero";
    case ErrorCode::UnassignedParameter: return "UnassignedParameter";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ParamSpaceMismatch: return "ParamSpaceMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::UnspecializedParameter: return "UnspecializedParameter";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegreeTooLargeForPrime: return "DegreeTooLargeForPrime";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EjTooSmall: return "EjTooSmall";
    case ErrorCode::EjExhausted: return "EjExhausted";
    case ErrorCode::DivisionFailure: return "DivisionFailure";
    case ErrorCode::ParameterConflict: return "ParameterConflict";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::OutOfContract: return "OutOfContract";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::MissingTransferMap: return "MissingTransferMap";
    case ErrorCode::RDivisibilityViolated: return "RDivisibilityViolated";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
{
}

void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

}  // namespace hyperdeg
