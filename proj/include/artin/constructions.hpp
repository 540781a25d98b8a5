#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/classify.hpp"
#include "artin/hom.hpp"

namespace artin {

/// k(sqrt u, sqrt v) over k = F2(u,v), basis 1, a, ab, b with a^2 = u, b^2 = v.
Algebra<Rf2> sqrt_uv_field();

/// The pair k -> D.
template <class K>
PairPtr<K> field_pair(const Algebra<K>& D, std::string name = "");

/// r x r with ones on the superdiagonal.
template <class K>
Mat<K> jordan_nilpotent(const Field<K>& F, Index r);

/// W-coordinates of (x, x_{1..r_2}, ..., x_{1..r_s}), entries as scalars in each B_i.
template <class K>
Vec<K> truncated_diagonal(const ArtinianPair<K>& P, const Layout& L, const Vec<K>& x);

template <class K>
struct ConstructionSpec {
  PairPtr<K> pair;  // k -> D
  std::vector<int> rank;
  Vec<K> a, b;  // supported in the first component
  K t;
  CaseLabel label = CaseLabel::Case1;

  Vec<K> a1() const { return pair->comp_part(a, 0); }
  Vec<K> b1() const { return pair->comp_part(b, 0); }
};

/// HypothesisViolated unless {1, a1, b1} is independent, a and b live in
/// D_1, and r_1 >= r_i.
template <class K>
void validate(const ConstructionSpec<K>& spec);

/// V_t spanned by d(x) + (a + t b) d(y) + b d(H y).
template <class K>
PairModule<K> construction_one(const ConstructionSpec<K>& spec);

struct ConstructionTwo {
  PairPtr<Fp> pair;  // k -> (k x ... x k) x D_2 x ... x D_s
  PairModule<Fp> module;
  Index l = 0;
};

/// D1 must split into l >= 4 local factors with residue field k.
ConstructionTwo construction_two(const Algebra<Fp>& D1, const std::vector<Algebra<Fp>>& rest, std::vector<int> rank);

/// Checks the case's defining relations on (a1, b1) inside D1 (CaseMismatch).
template <class K>
void check_witnesses(const Algebra<K>& D1, const Vec<K>& a1, const Vec<K>& b1, CaseLabel c);

template <class K>
bool is_admissible(const Algebra<K>& D1, const Vec<K>& a1, const Vec<K>& b1, CaseLabel c, const K& t);

/// Whether non-isomorphism of V_t and V_u follows from the case analysis.
template <class K>
bool distinguished(const Algebra<K>& D1, const Vec<K>& a1, const Vec<K>& b1, CaseLabel c, const K& t, const K& u);

/// Admissible members of `params` (all of k's default list when empty).
template <class K>
std::vector<K> admissible_parameters(const Algebra<K>& D1, const Vec<K>& a1, const Vec<K>& b1, CaseLabel c,
                                     std::vector<K> params = {});

template <class K>
struct SigmaTau {
  Mat<K> sigma, tau;
};

/// phi(d(x)) = d(sigma x) + (a + t b) d(tau x) + b d(H tau x); ExtractionFailed otherwise.
template <class K>
SigmaTau<K> sigma_tau_extract(const ConstructionSpec<K>& spec, const PairModule<K>& M, const Vec<K>& phi);

struct Certificate {
  bool certified = false;
  std::string reason;
  Index end_dim = 0;
  Index tau_dim = 0;  // dimension of the span of the tau parts
};

/// End(V_t) maps injectively and multiplicatively into D_1[H] (D_1 local,
/// H nilpotent), which makes End local.
template <class K>
Certificate locality_certificate(const ConstructionSpec<K>& spec, const PairModule<K>& M);

/// phi -> alpha (the common k-block on the l split factors) is injective
/// into k[H].
Certificate locality_certificate(const ConstructionTwo& C);

template <class K>
struct Realization {
  PairPtr<K> pair;
  PairModule<K> module;
  CaseLabel label = CaseLabel::Undecided;
  std::optional<K> t;
  std::string certificate;  // the ladder rung, or "sigma-tau"
};

/// An indecomposable module of the requested rank over k -> D (or over the
/// reduction of D the case calls for).
template <class K>
Realization<K> realize_rank(const Algebra<K>& D, std::vector<int> rank, std::uint64_t seed = 0);

template <class K>
struct FamilyReport {
  CaseLabel label = CaseLabel::Undecided;
  std::vector<K> params;
  std::vector<std::string> verdicts;               // indec / decomp / undecided
  std::vector<std::vector<IsoVerdict>> pairwise;
  std::vector<std::vector<bool>> distinguished;    // by the case predicate
  Index classes = 0;
};

template <class K>
FamilyReport<K> family(const Algebra<K>& D, std::vector<int> rank, std::vector<K> params = {},
                       std::uint64_t seed = 0);

}  // namespace artin
