#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artin/radical.hpp"

namespace artin {

/// A unital subalgebra A of a product B = B_1 x ... x B_s of local algebras.
template <class K>
struct ArtinianPair {
  Algebra<K> B;
  Algebra<K> A;
  Mat<K> A_incl;                 // B.dim x A.dim; columns are A's basis in B
  Subspace<K> A_space;           // span of A inside B
  Subspace<K> maxideal;          // the radical of A, inside B
  std::vector<Vec<K>> A_gens;    // algebra generators as given (B coordinates)
  std::vector<Algebra<K>> comps; // B_i on its own
  std::vector<Subspace<K>> comp_max;  // maximal ideal of B_i, in B_i coordinates
  std::string name;

  const Field<K>& field() const { return B.field; }
  Index s() const { return static_cast<Index>(comps.size()); }
  Index comp_dim(Index i) const { return B.components[i].second; }
  Index comp_offset(Index i) const { return B.components[i].first; }
  Vec<K> comp_part(const Vec<K>& b, Index i) const { return b.segment(comp_offset(i), comp_dim(i)); }
};

template <class K>
using PairPtr = std::shared_ptr<const ArtinianPair<K>>;

/// Each component of a product algebra on its own ({B} when B has none).
template <class K>
std::vector<Algebra<K>> component_algebras(const Algebra<K>& B);

/// A = subalgebra generated by A_gens; components must be local and A local.
template <class K>
PairPtr<K> make_pair(Algebra<K> B, const std::vector<Vec<K>>& A_gens, std::string name = "");

/// Coordinates of W = prod B_i^(r_i), ordered by (component, copy, basis).
struct Layout {
  std::vector<Index> cdim;
  std::vector<int> rank;
  std::vector<Index> comp_off;  // start of component i in W

  Layout() = default;
  Layout(std::vector<Index> component_dims, std::vector<int> r);
  Index total() const { return comp_off.back(); }
  Index block(Index i, Index c) const { return comp_off[i] + c * cdim[i]; }
  Index s() const { return static_cast<Index>(cdim.size()); }
};

template <class K>
Layout layout_of(const ArtinianPair<K>& P, const std::vector<int>& rank);

/// b * w for b in B acting on W blockwise.
template <class K>
Vec<K> act(const ArtinianPair<K>& P, const Layout& L, const Vec<K>& b, const Vec<K>& w);

/// Product inside the component algebra B_i (component coordinates).
template <class K>
Vec<K> comp_mul(const ArtinianPair<K>& P, Index i, const Vec<K>& x, const Vec<K>& y);

template <class K>
struct PairModule {
  PairPtr<K> pair;
  std::vector<int> rank;
  Layout layout;
  Subspace<K> V;
  std::vector<Vec<K>> a_gens;  // a minimal A-generating set of V

  Index dim_W() const { return layout.total(); }
  Index dim_V() const { return V.dim(); }
  const Field<K>& field() const { return pair->field(); }
};

/// Span of A * gens.
template <class K>
Subspace<K> a_span(const ArtinianPair<K>& P, const Layout& L, const std::vector<Vec<K>>& gens);

/// k-span of B * gens.
template <class K>
Subspace<K> b_span(const ArtinianPair<K>& P, const Layout& L, const std::vector<Vec<K>>& gens);

/// Validates A-stability and BV = W (NotAStable / NotGenerating otherwise).
template <class K>
PairModule<K> make_module(PairPtr<K> pair, std::vector<int> rank, const std::vector<Vec<K>>& generators);

/// Builds from arbitrary generators by closing under A first.
template <class K>
PairModule<K> make_module_a_span(PairPtr<K> pair, std::vector<int> rank, const std::vector<Vec<K>>& generators);

template <class K>
PairModule<K> direct_sum(const PairModule<K>& M, const PairModule<K>& N);

/// Embedding of W_M into W_{M+N}; `second` selects N's copies.
template <class K>
Mat<K> direct_sum_embedding(const Layout& sum, const Layout& part, const std::vector<int>& offset_copies);

template <class K>
bool same_module(const PairModule<K>& M, const PairModule<K>& N) {
  return M.pair == N.pair && M.rank == N.rank && M.V == N.V;
}

}  // namespace artin
