#include "artin/functors.hpp"

namespace artin {

template <class K>
QuotientPair<K> quotient_pair(PairPtr<K> P, const Subspace<K>& I) {
  const Field<K>& F = P->field();
  if (!is_two_sided_ideal(P->B, I)) throw Error(Errc::NotAnIdeal, "I is not an ideal of B");
  if (nilpotency_index(P->B, I) < 0) throw Error(Errc::NotNilpotent, "I is not nilpotent");
  Quotient<K> Q = quotient_by_ideal(P->B, I);
  if (static_cast<Index>(Q.alg.components.size()) != P->s())
    throw Error(Errc::InvariantViolation, "quotient lost the component structure");
  std::vector<Vec<K>> gens;
  for (Index a = 0; a < P->A.dim; ++a) gens.push_back(mul(F, Q.proj, Mat<K>(P->A_incl.col(a))));
  return QuotientPair<K>{P, make_pair(Q.alg, gens, P->name.empty() ? "" : P->name + "/I"), Q.proj};
}

template <class K>
PairModule<K> quotient_functor(const PairModule<K>& M, const QuotientPair<K>& Q) {
  if (M.pair != Q.source) throw Error(Errc::PairMismatch, "module is not over the quotiented pair");
  const ArtinianPair<K>& P = *M.pair;
  const ArtinianPair<K>& R = *Q.pair;
  const Field<K>& F = P.field();
  Layout L = layout_of(R, M.rank);
  Mat<K> pi = zeros(F, L.total(), M.dim_W());
  for (Index i = 0; i < P.s(); ++i)
    for (Index c = 0; c < M.rank[i]; ++c)
      pi.block(L.block(i, c), M.layout.block(i, c), R.comp_dim(i), P.comp_dim(i)) =
          Q.proj.block(R.comp_offset(i), P.comp_offset(i), R.comp_dim(i), P.comp_dim(i));
  Mat<K> img = mul(F, pi, M.V.basis);
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < img.cols(); ++j) gens.push_back(img.col(j));
  return make_module(Q.pair, M.rank, gens);
}

template <class K>
PairModule<K> quotient_functor(const PairModule<K>& M, const Subspace<K>& I) {
  return quotient_functor(M, quotient_pair(M.pair, I));
}

template <class K>
PairModule<K> extend_scalars(const PairModule<K>& M, PairPtr<K> target, const Mat<K>& incl) {
  const ArtinianPair<K>& C = *M.pair;
  const ArtinianPair<K>& B = *target;
  const Field<K>& F = C.field();
  if (incl.rows() != B.B.dim || incl.cols() != C.B.dim)
    throw Error(Errc::LengthMismatch, "inclusion has the wrong shape");
  if (C.s() != B.s()) throw Error(Errc::NotComponentwise, "component counts differ");
  for (Index j = 0; j < C.s(); ++j)
    for (Index col = C.comp_offset(j); col < C.comp_offset(j) + C.comp_dim(j); ++col)
      for (Index row = 0; row < B.B.dim; ++row)
        if (!incl(row, col).is_zero() && (row < B.comp_offset(j) || row >= B.comp_offset(j) + B.comp_dim(j)))
          throw Error(Errc::NotComponentwise, "component " + std::to_string(j) + " leaves its target component");
  Subspace<K> imgA = span(F, mul(F, incl, C.A_incl));
  if (!(imgA == B.A_space)) throw Error(Errc::PairMismatch, "target pair's A is not the image of A");
  Layout L = layout_of(B, M.rank);
  Mat<K> e = zeros(F, L.total(), M.dim_W());
  for (Index i = 0; i < C.s(); ++i)
    for (Index c = 0; c < M.rank[i]; ++c)
      e.block(L.block(i, c), M.layout.block(i, c), B.comp_dim(i), C.comp_dim(i)) =
          incl.block(B.comp_offset(i), C.comp_offset(i), B.comp_dim(i), C.comp_dim(i));
  Mat<K> img = mul(F, e, M.V.basis);
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < img.cols(); ++j) gens.push_back(img.col(j));
  return make_module(target, M.rank, gens);
}

namespace {

template <class K>
Subspace<K> times_B(const ArtinianPair<K>& P, const Subspace<K>& X) {
  return product_space(P.B, X, full_space(P.field(), P.B.dim));
}

}  // namespace

template <class K>
DrResult dr_conditions(const ArtinianPair<K>& P) {
  const Field<K>& F = P.field();
  Subspace<K> nB = times_B(P, P.maxideal);
  Subspace<K> n2B = product_space(P.B, P.maxideal, nB);
  DrResult r;
  r.d1 = P.B.dim - nB.dim();
  r.d2 = sum(F, nB, P.A_space).dim() - sum(F, n2B, P.A_space).dim();
  r.dr1 = r.d1 <= 3;
  r.dr2 = r.d2 <= 1;
  return r;
}

template <class K>
MiddleRing<K> middle_ring(const ArtinianPair<K>& P) {
  const Field<K>& F = P.field();
  DrResult dr = dr_conditions(P);
  if (dr.dr1 && dr.dr2) throw Error(Errc::FiniteTypeConditionsHold, "both finite-type conditions hold");
  if (!dr.dr1) return MiddleRing<K>{P.B, identity(F, P.B.dim), full_space(F, P.B.dim), true};
  Subspace<K> S = sum(F, times_B(P, P.maxideal), P.A_space);
  if (!S.contains_all(product_space(P.B, S, S).basis))
    throw Error(Errc::InvariantViolation, "A + nB is not closed under multiplication");
  Subalgebra<K> C = algebra_on_subspace(P.B, S, P.B.one);
  return MiddleRing<K>{C.alg, C.incl, S, false};
}

#define ARTIN_INSTANTIATE(K)                                                                        \
  template QuotientPair<K> quotient_pair(PairPtr<K>, const Subspace<K>&);                          \
  template PairModule<K> quotient_functor(const PairModule<K>&, const QuotientPair<K>&);           \
  template PairModule<K> quotient_functor(const PairModule<K>&, const Subspace<K>&);               \
  template PairModule<K> extend_scalars(const PairModule<K>&, PairPtr<K>, const Mat<K>&);          \
  template DrResult dr_conditions(const ArtinianPair<K>&);                                         \
  template MiddleRing<K> middle_ring(const ArtinianPair<K>&);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
