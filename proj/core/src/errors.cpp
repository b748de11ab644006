#include "uqaudit/errors.hpp"

namespace uqaudit {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::PoleAtPoint: return "PoleAtPoint";
        case ErrorKind::NonpositiveParameter: return "NonpositiveParameter";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BasisMismatch: return "BasisMismatch";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::UnexpectedKernelDimension: return "UnexpectedKernelDimension";
        case ErrorKind::NotInvolutory: return "NotInvolutory";
        case ErrorKind::DegeneratePairing: return "DegeneratePairing";
        case ErrorKind::DeformationParameterSingular: return "DeformationParameterSingular";
        case ErrorKind::UnknownClaim: return "UnknownClaim";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    }
    return "Unknown";
}

}  // namespace uqaudit
