#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "artin/functors.hpp"
#include "artin/hom.hpp"

namespace artin {

/// Truncation orders of the two branches of k[[x,y]]/((x^3 - y^7) x).
inline constexpr Index kBranchT = 19;
inline constexpr Index kBranchY = 7;

/// B = k[t]/(t^19) x k[y]/(y^7), A generated by (t^7, 0) and (t^3, y).
template <class K>
PairPtr<K> build_big_pair(const Field<K>& F);

/// k -> k[t]/(t^3) x k.
template <class K>
PairPtr<K> build_reduced_pair(const Field<K>& F);

/// {3i + 7j} below `bound` (bound <= 19).
std::set<int> semigroup_clearable(int bound);
/// Exponents below 19 outside the semigroup: 1, 2, 4, 5, 8, 11.
std::vector<int> residual_exponents();

/// The nilpotent ideal (maximal ideal of A) * B of a pair.
template <class K>
Subspace<K> max_ideal_times_B(const ArtinianPair<K>& P);

template <class K>
struct BranchModules {
  PairModule<K> m12, m13;  // ranks (1,2) and (1,3)
};

/// `reduced` must come from build_reduced_pair.
template <class K>
BranchModules<K> branch_modules(PairPtr<K> reduced);

/// Same generators read in the big pair (t^i -> t^i, constants -> constants),
/// closed under A. Reducing modulo max_ideal_times_B gives M back.
template <class K>
PairModule<K> lift_to_big(const PairModule<K>& M, PairPtr<K> big);

/// V as the A-column span of [u; Q2]: u over B_1 (length m), Q2 an n x m
/// matrix over B_2. Entries are in component coordinates.
template <class K>
struct Rank1nMatrix {
  std::vector<Vec<K>> u;
  std::vector<std::vector<Vec<K>>> q2;

  Index m() const { return static_cast<Index>(u.size()); }
  Index n() const { return static_cast<Index>(q2.size()); }
};

/// Read off minimal A-generators; RankMismatch unless rank is (1, n).
template <class K>
Rank1nMatrix<K> to_matrix(const PairModule<K>& M);

template <class K>
PairModule<K> to_module(PairPtr<K> big, const Rank1nMatrix<K>& Q);

template <class K>
struct NormalForm {
  Rank1nMatrix<K> q;  // Q2 = [I_n | 0] and u_1 = 1
  /// a_{i,e} after clearing semigroup terms, one row per u_2..u_n, columns
  /// in residual_exponents() order.
  std::vector<std::vector<K>> residual;
  std::vector<std::string> trace;
  std::optional<Index> zero_column;  // 0-based, in [1, n)
};

/// InvariantViolation when Q lacks a unit in u or an invertible n x n block.
template <class K>
NormalForm<K> normalize_rank_one_n(const ArtinianPair<K>& big, Rank1nMatrix<K> Q);

template <class K>
struct Rank1nDecision {
  Decision decision = Decision::Undecided;
  bool normal_form_conclusive = false;
  Decision end_path = Decision::Undecided;
  bool agree = false;
  NormalForm<K> nf;
  /// Ranks (1, n-1) and (0, 1); their direct sum is the normalized module.
  std::optional<std::pair<PairModule<K>, PairModule<K>>> split;
};

/// The normal form decides when it exposes a zero column; otherwise the
/// End-algebra verdict stands. Both are always computed.
template <class K>
Rank1nDecision<K> decide_rank_one_n(const PairModule<K>& M, const Budget& budget = {});

struct SweepReport {
  int n = 0;
  std::string field;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_total = 0;  // 7^(n-1) single-monomial u-vectors
  std::uint64_t exhaustive = 0;        // how many of them were run
  std::uint64_t samples = 0;
  bool truncated = false;              // budget cut the exhaustive part short
  std::uint64_t nf_decomposable = 0;
  std::uint64_t end_decomposable = 0;
  std::uint64_t agree = 0;
  std::uint64_t indecomposable = 0;
  std::string frontier;
  std::vector<std::string> failures;   // first few offending instances

  std::uint64_t instances() const { return exhaustive + samples; }
  bool all_decomposable() const {
    return !truncated && nf_decomposable == instances() && end_decomposable == instances();
  }
};

/// Rank (1, n) over F_p for n >= 4 (HypothesisViolated otherwise): every
/// u = (1, c_2 t^e_2, ..., c_n t^e_n) with Q2 = I_n up to `budget`
/// instances, then `samples` random matrices with n <= m <= n+3.
SweepReport nonexistence_sweep(const Field<Fp>& F, int n, std::uint64_t budget, std::uint64_t samples,
                               std::uint64_t seed);

/// A random rank-(1, n) matrix with m columns satisfying the Rank1nMatrix invariants.
template <class K>
Rank1nMatrix<K> random_rank1n(const ArtinianPair<K>& big, Index n, Index m, Rng& rng);

}  // namespace artin
