#pragma once

#include "artin/pair.hpp"

namespace artin {

/// (A/(I n A) -> B/I) together with the projection B -> B/I.
template <class K>
struct QuotientPair {
  PairPtr<K> source, pair;
  Mat<K> proj;  // (B/I).dim x B.dim
};

/// I must be a nilpotent ideal of B (NotAnIdeal / NotNilpotent).
template <class K>
QuotientPair<K> quotient_pair(PairPtr<K> P, const Subspace<K>& I);

/// (V + IW)/IW -> W/IW over the quotient pair.
template <class K>
PairModule<K> quotient_functor(const PairModule<K>& M, const QuotientPair<K>& Q);
template <class K>
PairModule<K> quotient_functor(const PairModule<K>& M, const Subspace<K>& I);

/// V -> B (x)_C W for M over (A -> C), along a componentwise inclusion C -> B
/// (B.dim x C.dim). The target pair must contain the image of A as its A.
template <class K>
PairModule<K> extend_scalars(const PairModule<K>& M, PairPtr<K> target, const Mat<K>& incl);

struct DrResult {
  bool dr1 = false, dr2 = false;
  Index d1 = 0, d2 = 0;
};

/// d1 = dim B/nB, d2 = dim (nB + A)/(n^2 B + A).
template <class K>
DrResult dr_conditions(const ArtinianPair<K>& P);

template <class K>
struct MiddleRing {
  Algebra<K> C;
  Mat<K> incl;       // B.dim x C.dim
  Subspace<K> space; // C inside B
  bool is_B = false;
};

/// C = B when dr1 fails, otherwise A + nB; FiniteTypeConditionsHold if both hold.
template <class K>
MiddleRing<K> middle_ring(const ArtinianPair<K>& P);

}  // namespace artin
