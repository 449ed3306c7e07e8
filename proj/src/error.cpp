#include "adaptcoord/error.hpp"

namespace adaptcoord {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DegenerateInX2: return "DegenerateInX2";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorCode::AxesNotNormalized: return "AxesNotNormalized";
    case ErrorCode::WrongHomogeneity: return "WrongHomogeneity";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::NonzeroAtOrigin: return "NonzeroAtOrigin";
    case ErrorCode::NonvanishingGradient: return "NonvanishingGradient";
    case ErrorCode::AlreadyAdapted: return "AlreadyAdapted";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::NonIntegerVertex: return "NonIntegerVertex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, const std::string& message, int line, int column)
    : Error(code, message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line), column_(column) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace adaptcoord
