#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsurf {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  ZeroOnCurve,
  Undersampled,
  DegreeMismatch,
  CriticalPointNearBoundary,
  WindingMismatch,
  DegenerateCurve,
  G1Invalid,
  G2Invalid,
  SeparationImpossible,
  SeparationViolated,
  NoAvoidingGraph,
  NoRoundDisc,
  InjectivityFailure,
  ZeroOnCircle,
  IllPosedSampling,
  UnstableDimension,
  VanishingCoefficient,
  NoConvergence,
  OutOfSampleFailure,
  InteriorEscape,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a failed numerical verification rather than bad input.
bool is_verification_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bsurf
