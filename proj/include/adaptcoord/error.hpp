#pragma once

#include <stdexcept>
#include <string>

namespace adaptcoord {

enum class ErrorCode {
    ZeroPolynomial,
    NotSquarefree,
    DegenerateInX2,
    EmptySupport,
    DegenerateFace,
    NotQuasiHomogeneous,
    AxesNotNormalized,
    WrongHomogeneity,
    NotFiniteType,
    NonzeroAtOrigin,
    NonvanishingGradient,
    AlreadyAdapted,
    IterationCapExceeded,
    InternalInvariantViolation,
    NonIntegerVertex,
    IndexOutOfRange,
    GridTooCoarse,
    InvalidArgument,
    SyntaxError,
    NonIntegerExponent,
    UnknownVariable,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the expression parser; positions are 1-based.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

// Guards conditions that the mathematics guarantees; a failure is a bug.
inline void ensure(bool condition, const char* what) {
    if (!condition) raise(ErrorCode::InternalInvariantViolation, what);
}

} // namespace adaptcoord
