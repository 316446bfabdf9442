#include "proxima/error.hpp"

namespace proxima {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidCell: return "InvalidCell";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotOnCycle: return "NotOnCycle";
    case ErrorCode::UncoveredCycle: return "UncoveredCycle";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::ScalarRequired: return "ScalarRequired";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::DuplicateId: return "DuplicateId";
    }
    return "Unknown";
}

} // namespace proxima
