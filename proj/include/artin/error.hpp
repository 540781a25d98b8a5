#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class Errc {
  ZeroInversion,
  NotASquare,
  UnsupportedField,
  InfiniteDimension,
  MixedFields,
  NotAProduct,
  NotAnIdeal,
  DimensionTooSmall,
  NotLocalA,
  NotAStable,
  NotGenerating,
  PairMismatch,
  NotIdempotent,
  TrivialIdempotent,
  UndecidedSummand,
  NotNilpotent,
  NotComponentwise,
  FiniteTypeConditionsHold,
  LengthMismatch,
  NeedAtLeastFourFactors,
  CaseMismatch,
  ExtractionFailed,
  HypothesisViolated,
  CertificationFailed,
  InvariantViolation,
  RankMismatch,
  BudgetExceeded,
  ParseError,
  Usage,
};

const char* errc_name(Errc c);

/// Every library failure is reported through this type; `code()` names the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace artin
