#include "artin/error.hpp"

namespace artin {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroInversion: return "ZeroInversion";
    case Errc::NotASquare: return "NotASquare";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::InfiniteDimension: return "InfiniteDimension";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotAProduct: return "NotAProduct";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::NotLocalA: return "NotLocalA";
    case Errc::NotAStable: return "NotAStable";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::PairMismatch: return "PairMismatch";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::TrivialIdempotent: return "TrivialIdempotent";
    case Errc::UndecidedSummand: return "UndecidedSummand";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotComponentwise: return "NotComponentwise";
    case Errc::FiniteTypeConditionsHold: return "FiniteTypeConditionsHold";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NeedAtLeastFourFactors: return "NeedAtLeastFourFactors";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::ExtractionFailed: return "ExtractionFailed";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace artin
