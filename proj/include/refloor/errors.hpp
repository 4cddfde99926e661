#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace refloor {

enum class ErrorCode {
    NotConvex,
    NotLattice,
    Degenerate,
    NotHTransverse,
    NotUnimodular,
    CornerMismatch,
    CutTooLarge,
    InexactDivision,
    ZeroPolynomial,
    HalfIntegerExponent,
    BadKind,
    SumMismatch,
    ConstantTermNotOne,
    MissingVariable,
    NonIntegerResult,
    ConfigurationMismatch,
    NegativeCodegree,
    InvalidPairing,
    InvalidArgument,
    SearchBudgetExceeded,
};

constexpr std::string_view to_string(ErrorCode c) noexcept {
    switch (c) {
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotHTransverse: return "NotHTransverse";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::CornerMismatch: return "CornerMismatch";
    case ErrorCode::CutTooLarge: return "CutTooLarge";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::HalfIntegerExponent: return "HalfIntegerExponent";
    case ErrorCode::BadKind: return "BadKind";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::ConfigurationMismatch: return "ConfigurationMismatch";
    case ErrorCode::NegativeCodegree: return "NegativeCodegree";
    case ErrorCode::InvalidPairing: return "InvalidPairing";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

} // namespace refloor
