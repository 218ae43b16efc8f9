#pragma once

#include <stdexcept>
#include <string>

namespace qm {

/// Error codes used across the library. Each maps to one failure mode named
/// in the operation contracts; CLI maps them to exit status 2 (bad input /
/// violated precondition), while failed verification suites exit 1.
enum class Errc {
  NotPrime,
  NotIrreducible,
  DegreeMismatch,
  DivisionByZero,
  SpecMismatch,
  NotABasis,
  DimensionMismatch,
  FieldMismatch,
  AmbientMismatch,
  CapExceeded,
  KernelNotContained,
  SelfOrthogonalDegenerate,
  BadParams,
  NotHyperplane,
  NoBasisContained,
  LoopContraction,
  RankZero,
  LengthMismatch,
  NotACodeword,
  PointsDependent,
  AxiomViolation,
  ParseError,
};

[[nodiscard]] inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotABasis: return "NotABasis";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::KernelNotContained: return "KernelNotContained";
    case Errc::SelfOrthogonalDegenerate: return "SelfOrthogonalDegenerate";
    case Errc::BadParams: return "BadParams";
    case Errc::NotHyperplane: return "NotHyperplane";
    case Errc::NoBasisContained: return "NoBasisContained";
    case Errc::LoopContraction: return "LoopContraction";
    case Errc::RankZero: return "RankZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotACodeword: return "NotACodeword";
    case Errc::PointsDependent: return "PointsDependent";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qm
