#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uqaudit {

enum class ErrorKind {
    DivisionByZero,
    PoleAtPoint,
    NonpositiveParameter,
    ParseError,
    DimensionMismatch,
    BasisMismatch,
    SingularMatrix,
    NoSolution,
    UnexpectedKernelDimension,
    NotInvolutory,
    DegeneratePairing,
    DeformationParameterSingular,
    UnknownClaim,
    UnsupportedFormat,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace uqaudit
