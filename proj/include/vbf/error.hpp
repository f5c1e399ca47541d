#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vbf {

enum class Errc {
    UnsupportedDegree,
    PolyDegreeMismatch,
    RejectsReducible,
    ZeroInverse,
    NotADivisor,
    NotInvertible,
    ContextMismatch,
    NotAPermutation,
    TooLarge,
    ParityMismatch,
    Singular,
    WrongDimension,
    RankDeficient,
    NotLinearized,
    GcdViolation,
    OddDegree,
    BudgetRequired,
    ConditionViolated,
    ParityViolated,
    DivisibilityViolated,
    ZeroElement,
    MalformedInput,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::PolyDegreeMismatch: return "PolyDegreeMismatch";
    case Errc::RejectsReducible: return "RejectsReducible";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::Singular: return "Singular";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotLinearized: return "NotLinearized";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::OddDegree: return "OddDegree";
    case Errc::BudgetRequired: return "BudgetRequired";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::ParityViolated: return "ParityViolated";
    case Errc::DivisibilityViolated: return "DivisibilityViolated";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Precondition or domain failure raised by every module of the library.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace vbf
