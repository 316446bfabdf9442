#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxima {

enum class ErrorCode {
    NotFound,
    InvalidCell,
    NotNested,
    NotOnCycle,
    UncoveredCycle,
    Mismatch,
    SpaceMismatch,
    NotTotal,
    ScalarRequired,
    EmptyBoundary,
    InvalidArgument,
    Overflow,
    SyntaxError,
    DanglingReference,
    DuplicateId,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the document parser; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, int line, int column, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace proxima
