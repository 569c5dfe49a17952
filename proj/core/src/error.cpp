#include "bsurf/error.hpp"

namespace bsurf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroOnCurve: return "ZeroOnCurve";
    case ErrorCode::Undersampled: return "Undersampled";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CriticalPointNearBoundary: return "CriticalPointNearBoundary";
    case ErrorCode::WindingMismatch: return "WindingMismatch";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::G1Invalid: return "G1Invalid";
    case ErrorCode::G2Invalid: return "G2Invalid";
    case ErrorCode::SeparationImpossible: return "SeparationImpossible";
    case ErrorCode::SeparationViolated: return "SeparationViolated";
    case ErrorCode::NoAvoidingGraph: return "NoAvoidingGraph";
    case ErrorCode::NoRoundDisc: return "NoRoundDisc";
    case ErrorCode::InjectivityFailure: return "InjectivityFailure";
    case ErrorCode::ZeroOnCircle: return "ZeroOnCircle";
    case ErrorCode::IllPosedSampling: return "IllPosedSampling";
    case ErrorCode::UnstableDimension: return "UnstableDimension";
    case ErrorCode::VanishingCoefficient: return "VanishingCoefficient";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::OutOfSampleFailure: return "OutOfSampleFailure";
    case ErrorCode::InteriorEscape: return "InteriorEscape";
  }
  return "Unknown";
}

bool is_verification_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::CriticalPointNearBoundary:
    case ErrorCode::DegenerateCurve:
    case ErrorCode::G1Invalid:
    case ErrorCode::G2Invalid:
    case ErrorCode::ZeroOnCircle:
    case ErrorCode::IllPosedSampling:
      return false;
    default:
      return true;
  }
}

}  // namespace bsurf
