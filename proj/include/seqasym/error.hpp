#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqasym {

enum class ErrorCode {
    ZeroConstantTerm,
    BadConstantTerm,
    NonIntegerCount,
    NegativeCount,
    PeriodMismatch,
    NegativeIrreducibleCount,
    LeadingTermUndefined,
    UnsupportedF,
    BudgetExceeded,
    UnknownClass,
    RangeError,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::NonIntegerCount: return "NonIntegerCount";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::PeriodMismatch: return "PeriodMismatch";
    case ErrorCode::NegativeIrreducibleCount: return "NegativeIrreducibleCount";
    case ErrorCode::LeadingTermUndefined: return "LeadingTermUndefined";
    case ErrorCode::UnsupportedF: return "UnsupportedF";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace seqasym
