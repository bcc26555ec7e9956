#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svf {

enum class ErrorKind {
    ParseError,
    DivisionByZero,
    EmptyInput,
    NegativeEntry,
    NormalizationViolated,
    UnknownPreset,
    DimensionMismatch,
    InstanceTooLarge,
    NonIntegerWeights,
    WeightRangeOverflow,
    PreconditionViolated,
    BadInstance,
    BadShape,
    BadY,
    DegenerateDenominator,
    ShapeViolation,
    ArityMismatch,
    ZeroSemivalueEncountered,
    UsageError,
    IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NormalizationViolated: return "NormalizationViolated";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NonIntegerWeights: return "NonIntegerWeights";
    case ErrorKind::WeightRangeOverflow: return "WeightRangeOverflow";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BadInstance: return "BadInstance";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadY: return "BadY";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroSemivalueEncountered: return "ZeroSemivalueEncountered";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace svf
