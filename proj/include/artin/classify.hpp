#pragma once

#include <string>
#include <vector>

#include "artin/radical.hpp"

namespace artin {

enum class CaseLabel { Dim3Special, Case1, Case2a, Case2b, Case2c, Case2d, Undecided };

const char* case_name(CaseLabel c);
CaseLabel parse_case(const std::string& s);

template <class K>
struct CaseResult {
  CaseLabel label = CaseLabel::Undecided;
  std::vector<Vec<K>> witnesses;  // (a, b), or the primitive idempotents for Case2d
  std::string note;
};

/// Elements in the documented order: basis elements, sums of two basis
/// elements, every element when |k|^dim <= 2^20, then seeded random draws.
template <class K>
class CandidateStream {
 public:
  CandidateStream(const Algebra<K>& E, std::uint64_t seed, std::uint64_t random_draws = 10000);
  bool next(Vec<K>& out);
  bool exhausted_all() const { return exhaustive_ && stage_ > 2; }

 private:
  const Algebra<K>& E_;
  Rng rng_;
  std::uint64_t draws_, enum_size_;
  bool exhaustive_;
  int stage_ = 0;
  std::uint64_t i_ = 0, j_ = 1;
};

/// Which of the standard cases D1 falls into, with witnesses. Classification
/// order: Dim3Special (dim 3), then Case1, Case2b, Case2c, Case2d, Case2a.
template <class K>
CaseResult<K> classify_case(const Algebra<K>& D1, std::uint64_t seed = 0);

/// Primitive idempotents of a commutative algebra whose semisimple quotient
/// is a product of copies of F_p; empty when that fails.
std::vector<Vec<Fp>> split_into_local_factors(const Algebra<Fp>& D);

}  // namespace artin
