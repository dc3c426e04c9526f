#ifndef CERING_ERROR_HPP
#define CERING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cering {

enum class ErrorCode {
    FieldMismatch,
    DivisionByZero,
    AlgebraMismatch,
    NotTwoSided,
    ImproperIdeal,
    UnsupportedField,
    PreconditionFailed,
    ZeroElement,
    CapExceeded,
    InvalidGroupTable,
    DimensionCap,
    InconclusiveOverInfiniteField,
    ParseError,
    Internal,
};

/// All library failures throw this; `code()` lets callers dispatch
/// without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::NotTwoSided: return "NotTwoSided";
        case ErrorCode::ImproperIdeal: return "ImproperIdeal";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
        case ErrorCode::DimensionCap: return "DimensionCap";
        case ErrorCode::InconclusiveOverInfiniteField: return "InconclusiveOverInfiniteField";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace cering

#endif
