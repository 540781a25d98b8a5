#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/pair.hpp"

namespace artin {

/// Flattened coordinates of a block-diagonal B-linear map W_src -> W_tgt:
/// component i contributes an r'_i x r_i matrix over B_i, ordered
/// (component, target copy, source copy, basis index).
struct HomShape {
  Layout src, tgt;
  std::vector<Index> off;

  HomShape() = default;
  HomShape(Layout s, Layout t);
  Index size() const { return off.back(); }
  Index at(Index i, Index to, Index from) const { return off[i] + (to * src.rank[i] + from) * src.cdim[i]; }
};

template <class K>
struct HomSpace {
  PairModule<K> source, target;
  HomShape shape;
  Subspace<K> space;  // inside k^{shape.size()}

  Index dim() const { return space.dim(); }
  Vec<K> basis(Index j) const { return space.basis.col(j); }
  /// Coordinates of a member map in the basis.
  Vec<K> coords(const Vec<K>& phi) const { return space.coords(phi); }
  Vec<K> combine(const Vec<K>& c) const;
};

/// Hom(M, N): block maps carrying V_M into V_N. Only A-generators of V_M
/// are imposed, which suffices by B-linearity. PairMismatch across pairs.
template <class K>
HomSpace<K> hom_space(const PairModule<K>& M, const PairModule<K>& N);

template <class K>
Vec<K> apply_map(const ArtinianPair<K>& P, const HomShape& S, const Vec<K>& phi, const Vec<K>& w);

/// The k-matrix of phi on W (dim W_tgt x dim W_src).
template <class K>
Mat<K> map_matrix(const ArtinianPair<K>& P, const HomShape& S, const Vec<K>& phi);

/// psi o phi, with phi of shape `inner` and psi of shape `outer`.
template <class K>
Vec<K> compose(const ArtinianPair<K>& P, const HomShape& outer, const Vec<K>& psi, const HomShape& inner,
               const Vec<K>& phi);

template <class K>
Vec<K> identity_map(const PairModule<K>& M);

/// End(M) with structure constants in the hom_space basis; product is composition.
template <class K>
Algebra<K> end_algebra(const HomSpace<K>& H);
template <class K>
Algebra<K> end_algebra(const PairModule<K>& M);

enum class Decision { Indec, Decomp, Undecided };
const char* decision_name(Decision d);

template <class K>
struct IndecResult {
  Decision decision = Decision::Undecided;
  std::optional<Vec<K>> idempotent;  // flattened endomorphism, when Decomp
  std::string rung;
  Index end_dim = 0;
};

template <class K>
IndecResult<K> is_indecomposable(const PairModule<K>& M, const Budget& budget = {});

/// e(V) -> e(W) and (1-e)(V) -> (1-e)(W) on free bases of the images.
template <class K>
std::pair<PairModule<K>, PairModule<K>> split_by_idempotent(const PairModule<K>& M, const Vec<K>& e);

/// UndecidedSummand when some summand stays undecided.
template <class K>
std::vector<PairModule<K>> krull_schmidt(const PairModule<K>& M, const Budget& budget = {});

enum class IsoVerdict { Iso, NonIso, Undecided };
const char* iso_name(IsoVerdict v);

template <class K>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::optional<Vec<K>> map;  // an isomorphism M -> N, when Iso
  std::string certificate;
};

template <class K>
IsoResult<K> is_isomorphic(const PairModule<K>& M, const PairModule<K>& N, const Budget& budget = {});

/// A random automorphism of W (blocks with a unit residue matrix).
template <class K>
Vec<K> random_automorphism(const PairModule<K>& M, Rng& rng);

/// The module phi(V) -> W for an automorphism phi of W.
template <class K>
PairModule<K> transport(const PairModule<K>& M, const Vec<K>& phi);

}  // namespace artin
