#ifndef SCT_ERRORS_HPP
#define SCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sct {

/// Error categories raised by construction, surgery and solver entry points.
enum class Errc {
    NonUniform,
    DuplicateFacet,
    VertexOutOfRange,
    IsolatedVertex,
    NotAFace,
    OverlappingVertexSets,
    NotAPseudomanifold,
    LabelUnderflow,
    BadParams,
    FlipPreconditionFailed,
    NotAFaceConfiguration,
    ReplacementGuardFailed,
    BoundaryMismatch,
    BoundaryUndefined,
    StaleLabel,
    NotAPermutation,
    BudgetExhausted,
    ParseError,
};

inline const char* to_string(Errc c) {
    switch (c) {
        case Errc::NonUniform: return "NonUniform";
        case Errc::DuplicateFacet: return "DuplicateFacet";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::IsolatedVertex: return "IsolatedVertex";
        case Errc::NotAFace: return "NotAFace";
        case Errc::OverlappingVertexSets: return "OverlappingVertexSets";
        case Errc::NotAPseudomanifold: return "NotAPseudomanifold";
        case Errc::LabelUnderflow: return "LabelUnderflow";
        case Errc::BadParams: return "BadParams";
        case Errc::FlipPreconditionFailed: return "FlipPreconditionFailed";
        case Errc::NotAFaceConfiguration: return "NotAFaceConfiguration";
        case Errc::ReplacementGuardFailed: return "ReplacementGuardFailed";
        case Errc::BoundaryMismatch: return "BoundaryMismatch";
        case Errc::BoundaryUndefined: return "BoundaryUndefined";
        case Errc::StaleLabel: return "StaleLabel";
        case Errc::NotAPermutation: return "NotAPermutation";
        case Errc::BudgetExhausted: return "BudgetExhausted";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace sct

#endif // SCT_ERRORS_HPP
