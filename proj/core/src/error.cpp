#include "fourier/error.hpp"

namespace fourier {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::AmbiguousPairing: return "AmbiguousPairing";
    case ErrorCode::NonpositiveFirstColumn: return "NonpositiveFirstColumn";
    case ErrorCode::NotClosedUnderConjugation: return "NotClosedUnderConjugation";
    case ErrorCode::InvalidFirstColumn: return "InvalidFirstColumn";
    case ErrorCode::IrrationalDegree: return "IrrationalDegree";
    case ErrorCode::IrrationalNorm: return "IrrationalNorm";
    case ErrorCode::NonpositiveDegree: return "NonpositiveDegree";
    case ErrorCode::FourierAxiomsFailed: return "FourierAxiomsFailed";
    case ErrorCode::CAlgebraAxiomsFailed: return "CAlgebraAxiomsFailed";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::IntegralityFailed: return "IntegralityFailed";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::DominanceFailed: return "DominanceFailed";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NonIntegerDegree: return "NonIntegerDegree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fourier
