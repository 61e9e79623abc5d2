#pragma once

#include <stdexcept>
#include <string>

namespace legendrian {

enum class Err {
    MalformedToken,
    StrandCountUnderflow,
    OpenEnds,
    MultipleComponents,
    NonPlanar,
    SearchBudgetExceeded,
    UnknownGenerator,
    GradingMismatch,
    SelfReference,
    SourceTargetMismatch,
    BudgetExceeded,
    InvalidAugmentation,
    InvalidGap,
    RegionMismatch,
    PushoutNotVerified,
    NotShortExact,
    ShapeViolation,
    UnassignedIndex,
    UsageError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::MalformedToken: return "MalformedToken";
        case Err::StrandCountUnderflow: return "StrandCountUnderflow";
        case Err::OpenEnds: return "OpenEnds";
        case Err::MultipleComponents: return "MultipleComponents";
        case Err::NonPlanar: return "NonPlanar";
        case Err::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Err::UnknownGenerator: return "UnknownGenerator";
        case Err::GradingMismatch: return "GradingMismatch";
        case Err::SelfReference: return "SelfReference";
        case Err::SourceTargetMismatch: return "SourceTargetMismatch";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::InvalidAugmentation: return "InvalidAugmentation";
        case Err::InvalidGap: return "InvalidGap";
        case Err::RegionMismatch: return "RegionMismatch";
        case Err::PushoutNotVerified: return "PushoutNotVerified";
        case Err::NotShortExact: return "NotShortExact";
        case Err::ShapeViolation: return "ShapeViolation";
        case Err::UnassignedIndex: return "UnassignedIndex";
        case Err::UsageError: return "UsageError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

}  // namespace legendrian
