#ifndef GDFT_ERRORS_HPP
#define GDFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gdft {

// Error categories raised by the toolkit.  The CLI maps these onto its
// exit-code contract (config = 1, numeric = 2, infeasible = 3).
enum class ErrorKind {
    NonHermitianInput,
    DimensionMismatch,
    LinearlyDependentBasis,
    NonRealExpectation,
    EigensolverFailure,
    NotAbelian,
    DegeneratePolytope,
    EmptyFacet,
    NotRepresentable,
    NotSimplexSetting,
    DidNotConverge,
    DegenerateGroundState,
    NotInRelativeInterior,
    CriticalFacetPoint,
    ZeroDenominator,
    NotNiceFacet,
    NotOnFacet,
    UnsupportedAlgebra,
    NotSimultaneouslyDiagonalizable,
    NotFullDimensional,
    NoCandidates,
    Unsupported,
    ConfigParseError,
};

class GdftError : public std::runtime_error {
  public:
    GdftError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonHermitianInput: return "NonHermitianInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::LinearlyDependentBasis: return "LinearlyDependentBasis";
        case ErrorKind::NonRealExpectation: return "NonRealExpectation";
        case ErrorKind::EigensolverFailure: return "EigensolverFailure";
        case ErrorKind::NotAbelian: return "NotAbelian";
        case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
        case ErrorKind::EmptyFacet: return "EmptyFacet";
        case ErrorKind::NotRepresentable: return "NotRepresentable";
        case ErrorKind::NotSimplexSetting: return "NotSimplexSetting";
        case ErrorKind::DidNotConverge: return "DidNotConverge";
        case ErrorKind::DegenerateGroundState: return "DegenerateGroundState";
        case ErrorKind::NotInRelativeInterior: return "NotInRelativeInterior";
        case ErrorKind::CriticalFacetPoint: return "CriticalFacetPoint";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NotNiceFacet: return "NotNiceFacet";
        case ErrorKind::NotOnFacet: return "NotOnFacet";
        case ErrorKind::UnsupportedAlgebra: return "UnsupportedAlgebra";
        case ErrorKind::NotSimultaneouslyDiagonalizable:
            return "NotSimultaneouslyDiagonalizable";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::NoCandidates: return "NoCandidates";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::ConfigParseError: return "ConfigParseError";
    }
    return "Unknown";
}

}  // namespace gdft

#endif  // GDFT_ERRORS_HPP
