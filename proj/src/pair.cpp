#include "artin/pair.hpp"

#include <type_traits>

namespace artin {

Layout::Layout(std::vector<Index> component_dims, std::vector<int> r)
    : cdim(std::move(component_dims)), rank(std::move(r)) {
  comp_off.push_back(0);
  for (std::size_t i = 0; i < cdim.size(); ++i) comp_off.push_back(comp_off.back() + rank[i] * cdim[i]);
}

template <class K>
Layout layout_of(const ArtinianPair<K>& P, const std::vector<int>& rank) {
  if (static_cast<Index>(rank.size()) != P.s())
    throw Error(Errc::RankMismatch, "rank has " + std::to_string(rank.size()) + " entries, B has " +
                                        std::to_string(P.s()) + " components");
  bool nonzero = false;
  for (int r : rank) {
    if (r < 0) throw Error(Errc::RankMismatch, "negative rank entry");
    nonzero = nonzero || r > 0;
  }
  if (!nonzero) throw Error(Errc::RankMismatch, "rank tuple is zero");
  std::vector<Index> d;
  for (Index i = 0; i < P.s(); ++i) d.push_back(P.comp_dim(i));
  return Layout(d, rank);
}

namespace {

template <class K>
Algebra<K> component_algebra(const Algebra<K>& B, Index off, Index len) {
  std::vector<std::string> labels(B.labels.begin() + off, B.labels.begin() + off + len);
  auto rule = [&](Index i, Index j) { return Vec<K>(B.mul(B.basis(off + i), B.basis(off + j)).segment(off, len)); };
  Algebra<K> C = make_algebra(B.field, labels, rule, Vec<K>(B.one.segment(off, len)));
  C.components = {{0, len}};
  return C;
}

}  // namespace

template <class K>
std::vector<Algebra<K>> component_algebras(const Algebra<K>& B) {
  if (!B.has_components()) {
    Algebra<K> C = B;
    C.components = {{0, B.dim}};
    return {C};
  }
  std::vector<Algebra<K>> out;
  for (auto [off, len] : B.components) out.push_back(component_algebra(B, off, len));
  return out;
}

namespace {

template <class K>
Subspace<K> max_ideal(const Algebra<K>& C) {
  if constexpr (std::is_same_v<K, Fp>)
    return radical(C);
  else
    return nilradical_commutative(C);
}

}  // namespace

template <class K>
PairPtr<K> make_pair(Algebra<K> B, const std::vector<Vec<K>>& A_gens, std::string name) {
  auto P = std::make_shared<ArtinianPair<K>>(ArtinianPair<K>{B, B, {}, {}, {}, A_gens, {}, {}, std::move(name)});
  if (!P->B.has_components()) P->B.components = {{0, P->B.dim}};
  if (!is_commutative(P->B)) throw Error(Errc::HypothesisViolated, "B must be commutative");
  for (Algebra<K>& C : component_algebras(P->B)) {
    const Index off = P->B.components[P->comps.size()].first;
    if (is_local(C, Budget{}).verdict != Verdict::Local)
      throw Error(Errc::HypothesisViolated, "component at offset " + std::to_string(off) + " is not local");
    P->comp_max.push_back(max_ideal(C));
    P->comps.push_back(std::move(C));
  }
  for (auto& g : A_gens)
    if (g.size() != P->B.dim) throw Error(Errc::LengthMismatch, "A generator has the wrong length");
  Subalgebra<K> A = subalgebra_generated(P->B, A_gens);
  P->A = A.alg;
  P->A_incl = A.incl;
  P->A_space = A.space;
  Subspace<K> rad = max_ideal(P->A);
  if (P->A.dim - rad.dim() != 1)
    throw Error(Errc::NotLocalA, "dim A/rad(A) = " + std::to_string(P->A.dim - rad.dim()) + ", expected 1");
  P->maxideal = rad.dim() ? span(P->field(), mul(P->field(), P->A_incl, rad.basis)) : zero_space(P->field(), P->B.dim);
  return P;
}

template <class K>
Vec<K> comp_mul(const ArtinianPair<K>& P, Index i, const Vec<K>& x, const Vec<K>& y) {
  return P.comps[i].mul(x, y);
}

template <class K>
Vec<K> act(const ArtinianPair<K>& P, const Layout& L, const Vec<K>& b, const Vec<K>& w) {
  Vec<K> out = zero_vec(P.field(), L.total());
  for (Index i = 0; i < L.s(); ++i) {
    Vec<K> bi = P.comp_part(b, i);
    if (is_zero_mat(bi)) continue;
    for (Index c = 0; c < L.rank[i]; ++c) {
      const Index o = L.block(i, c);
      out.segment(o, L.cdim[i]) = P.comps[i].mul(bi, Vec<K>(w.segment(o, L.cdim[i])));
    }
  }
  return out;
}

template <class K>
Subspace<K> a_span(const ArtinianPair<K>& P, const Layout& L, const std::vector<Vec<K>>& gens) {
  std::vector<Vec<K>> all;
  for (const auto& g : gens)
    for (Index a = 0; a < P.A.dim; ++a) all.push_back(act(P, L, Vec<K>(P.A_incl.col(a)), g));
  if (all.empty()) return zero_space(P.field(), L.total());
  return span(P.field(), columns(P.field(), all, L.total()));
}

template <class K>
Subspace<K> b_span(const ArtinianPair<K>& P, const Layout& L, const std::vector<Vec<K>>& gens) {
  std::vector<Vec<K>> all;
  for (const auto& g : gens)
    for (Index b = 0; b < P.B.dim; ++b) all.push_back(act(P, L, P.B.basis(b), g));
  if (all.empty()) return zero_space(P.field(), L.total());
  return span(P.field(), columns(P.field(), all, L.total()));
}

namespace {

template <class K>
std::vector<Vec<K>> cols_of(const Mat<K>& M) {
  std::vector<Vec<K>> out;
  for (Index j = 0; j < M.cols(); ++j) out.push_back(M.col(j));
  return out;
}

template <class K>
std::vector<Vec<K>> minimal_a_generators(const ArtinianPair<K>& P, const Layout& L, const Subspace<K>& V) {
  const Field<K>& F = P.field();
  std::vector<Vec<K>> nv;
  for (Index n = 0; n < P.maxideal.dim(); ++n)
    for (Index j = 0; j < V.dim(); ++j) nv.push_back(act(P, L, Vec<K>(P.maxideal.basis.col(n)), Vec<K>(V.basis.col(j))));
  Subspace<K> S = nv.empty() ? zero_space(F, L.total()) : span(F, columns(F, nv, L.total()));
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < V.dim(); ++j) {
    Vec<K> v = V.basis.col(j);
    if (S.contains(v)) continue;
    gens.push_back(v);
    S = sum(F, S, span(F, Mat<K>(v)));
  }
  return gens;
}

}  // namespace

template <class K>
PairModule<K> make_module(PairPtr<K> pair, std::vector<int> rank, const std::vector<Vec<K>>& generators) {
  const ArtinianPair<K>& P = *pair;
  const Field<K>& F = P.field();
  Layout L = layout_of(P, rank);
  for (auto& g : generators)
    if (g.size() != L.total())
      throw Error(Errc::LengthMismatch, "generator length " + std::to_string(g.size()) + ", W has dimension " +
                                            std::to_string(L.total()));
  Subspace<K> V = generators.empty() ? zero_space(F, L.total()) : span(F, columns(F, generators, L.total()));
  for (Index a = 0; a < P.A.dim; ++a)
    for (Index j = 0; j < V.dim(); ++j)
      if (!V.contains(act(P, L, Vec<K>(P.A_incl.col(a)), Vec<K>(V.basis.col(j)))))
        throw Error(Errc::NotAStable, "A-basis element " + std::to_string(a) + " moves V-basis vector " +
                                          std::to_string(j) + " out of V");
  Subspace<K> BV = b_span(P, L, cols_of(V.basis));
  if (BV.dim() != L.total()) {
    for (Index i = 0; i < L.total(); ++i)
      if (!BV.contains(unit_vec(F, L.total(), i)))
        throw Error(Errc::NotGenerating, "BV misses W coordinate " + std::to_string(i));
  }
  PairModule<K> M{pair, rank, L, V, {}};
  M.a_gens = minimal_a_generators(P, L, V);
  return M;
}

template <class K>
PairModule<K> make_module_a_span(PairPtr<K> pair, std::vector<int> rank, const std::vector<Vec<K>>& generators) {
  Layout L = layout_of(*pair, rank);
  Subspace<K> V = a_span(*pair, L, generators);
  return make_module(pair, std::move(rank), cols_of(V.basis));
}

template <class K>
Mat<K> direct_sum_embedding(const Layout& sum, const Layout& part, const std::vector<int>& offset_copies) {
  Mat<K> E = Mat<K>::Constant(sum.total(), part.total(), K(0));
  for (Index i = 0; i < part.s(); ++i)
    for (Index c = 0; c < part.rank[i]; ++c)
      for (Index m = 0; m < part.cdim[i]; ++m) E(sum.block(i, c + offset_copies[i]) + m, part.block(i, c) + m) = K(1);
  return E;
}

template <class K>
PairModule<K> direct_sum(const PairModule<K>& M, const PairModule<K>& N) {
  if (M.pair != N.pair) throw Error(Errc::PairMismatch, "direct sum of modules over different pairs");
  const Field<K>& F = M.field();
  std::vector<int> r(M.rank.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = M.rank[i] + N.rank[i];
  Layout L = layout_of(*M.pair, r);
  Mat<K> eM = direct_sum_embedding<K>(L, M.layout, std::vector<int>(r.size(), 0));
  Mat<K> eN = direct_sum_embedding<K>(L, N.layout, M.rank);
  retype(F, eM);
  retype(F, eN);
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < M.V.dim(); ++j) gens.push_back(mul(F, eM, Mat<K>(M.V.basis.col(j))));
  for (Index j = 0; j < N.V.dim(); ++j) gens.push_back(mul(F, eN, Mat<K>(N.V.basis.col(j))));
  return make_module(M.pair, r, gens);
}

#define ARTIN_INSTANTIATE(K)                                                                              \
  template std::vector<Algebra<K>> component_algebras(const Algebra<K>&);                               \
  template Layout layout_of(const ArtinianPair<K>&, const std::vector<int>&);                           \
  template PairPtr<K> make_pair(Algebra<K>, const std::vector<Vec<K>>&, std::string);                   \
  template Vec<K> comp_mul(const ArtinianPair<K>&, Index, const Vec<K>&, const Vec<K>&);                \
  template Vec<K> act(const ArtinianPair<K>&, const Layout&, const Vec<K>&, const Vec<K>&);             \
  template Subspace<K> a_span(const ArtinianPair<K>&, const Layout&, const std::vector<Vec<K>>&);       \
  template Subspace<K> b_span(const ArtinianPair<K>&, const Layout&, const std::vector<Vec<K>>&);       \
  template PairModule<K> make_module(PairPtr<K>, std::vector<int>, const std::vector<Vec<K>>&);         \
  template PairModule<K> make_module_a_span(PairPtr<K>, std::vector<int>, const std::vector<Vec<K>>&);  \
  template Mat<K> direct_sum_embedding<K>(const Layout&, const Layout&, const std::vector<int>&);        \
  template PairModule<K> direct_sum(const PairModule<K>&, const PairModule<K>&);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
