#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/linalg.hpp"
#include "artin/upoly.hpp"

namespace artin {

/// Finite-dimensional associative unital algebra given by structure constants.
///
/// The table is sparse: entry (i, j) lists the nonzero coordinates of
/// b_i * b_j. `components` is filled when the algebra is an explicit product.
template <class K>
struct Algebra {
  using Term = std::pair<Index, K>;

  Field<K> field;
  Index dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> table;  // index i * dim + j
  Vec<K> one;
  std::vector<std::pair<Index, Index>> components;  // (offset, length)

  explicit Algebra(Field<K> F) : field(std::move(F)) {}

  const std::vector<Term>& entry(Index i, Index j) const { return table[i * dim + j]; }

  Vec<K> basis(Index i) const { return unit_vec(field, dim, i); }
  Vec<K> zero() const { return zero_vec(field, dim); }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out = zero();
    for (Index i = 0; i < dim; ++i) {
      if (x(i).is_zero()) continue;
      for (Index j = 0; j < dim; ++j) {
        if (y(j).is_zero()) continue;
        K s = x(i) * y(j);
        for (const auto& [m, c] : entry(i, j)) out(m) += s * c;
      }
    }
    return out;
  }

  /// Matrix of y -> x y.
  Mat<K> left_mult(const Vec<K>& x) const {
    Mat<K> L = zeros(field, dim, dim);
    for (Index i = 0; i < dim; ++i) {
      if (x(i).is_zero()) continue;
      for (Index j = 0; j < dim; ++j)
        for (const auto& [m, c] : entry(i, j)) L(m, j) += x(i) * c;
    }
    return L;
  }
  /// Matrix of y -> y x.
  Mat<K> right_mult(const Vec<K>& x) const {
    Mat<K> R = zeros(field, dim, dim);
    for (Index i = 0; i < dim; ++i) {
      if (x(i).is_zero()) continue;
      for (Index j = 0; j < dim; ++j)
        for (const auto& [m, c] : entry(j, i)) R(m, j) += x(i) * c;
    }
    return R;
  }

  Vec<K> pow(Vec<K> x, unsigned long long e) const {
    Vec<K> r = one;
    while (e) {
      if (e & 1) r = mul(r, x);
      e >>= 1;
      if (e) x = mul(x, x);
    }
    return r;
  }

  bool has_components() const { return !components.empty(); }
};

/// Builds an algebra from a product rule on basis indices.
template <class K, class Rule>
Algebra<K> make_algebra(const Field<K>& F, std::vector<std::string> labels, Rule&& rule, Vec<K> one) {
  Algebra<K> E(F);
  E.dim = static_cast<Index>(labels.size());
  E.labels = std::move(labels);
  E.table.resize(E.dim * E.dim);
  for (Index i = 0; i < E.dim; ++i)
    for (Index j = 0; j < E.dim; ++j) {
      Vec<K> p = rule(i, j);
      for (Index m = 0; m < E.dim; ++m)
        if (!p(m).is_zero()) E.table[i * E.dim + j].push_back({m, F.typed(p(m))});
    }
  E.one = std::move(one);
  retype(F, E.one);
  return E;
}

/// From dense tables: mul[i][j] holds the coordinates of b_i b_j.
template <class K>
Algebra<K> make_algebra_dense(const Field<K>& F, std::vector<std::string> labels,
                              const std::vector<std::vector<Vec<K>>>& mul, Vec<K> one) {
  return make_algebra(F, std::move(labels), [&](Index i, Index j) { return mul[i][j]; }, std::move(one));
}

/// k[t]/(t^n) with basis 1, t, ..., t^(n-1).
template <class K>
Algebra<K> make_truncated_poly_algebra(const Field<K>& F, Index n, const std::string& var = "t");

/// k[X,Y]/I for a monomial ideal I given by exponent pairs (a, b) meaning X^a Y^b.
template <class K>
Algebra<K> make_monomial_quotient(const Field<K>& F, const std::vector<std::pair<int, int>>& gens);

template <class K>
Algebra<K> product_algebra(const std::vector<Algebra<K>>& factors);

template <class K>
std::vector<Vec<K>> component_idempotents(const Algebra<K>& B);

/// Subspace closed under multiplication, with its own structure constants.
/// `incl` maps sub-coordinates into the parent (parent.dim rows).
template <class K>
struct Subalgebra {
  Algebra<K> alg;
  Mat<K> incl;
  Subspace<K> space;
};

/// Smallest unital subalgebra containing gens.
template <class K>
Subalgebra<K> subalgebra_generated(const Algebra<K>& B, const std::vector<Vec<K>>& gens);

/// Algebra on a multiplicatively closed subspace with the given unit (e.g. a
/// corner algebra e E e with unit e).
template <class K>
Subalgebra<K> algebra_on_subspace(const Algebra<K>& E, const Subspace<K>& S, const Vec<K>& unit);

template <class K>
Subalgebra<K> corner_algebra(const Algebra<K>& E, const Vec<K>& e);

template <class K>
struct Quotient {
  Algebra<K> alg;
  Mat<K> proj;  // quotient.dim x E.dim
  Mat<K> lift;  // E.dim x quotient.dim, a section onto the complement basis
};

template <class K>
bool is_two_sided_ideal(const Algebra<K>& E, const Subspace<K>& I);

template <class K>
Quotient<K> quotient_by_ideal(const Algebra<K>& E, const Subspace<K>& I);

/// span{x y : x in X, y in Y}
template <class K>
Subspace<K> product_space(const Algebra<K>& E, const Subspace<K>& X, const Subspace<K>& Y);

template <class K>
UPoly<K> min_poly(const Algebra<K>& E, const Vec<K>& a);

template <class K>
Vec<K> eval_poly(const Algebra<K>& E, const UPoly<K>& f, const Vec<K>& a);

template <class K>
bool check_linear_independence(const Algebra<K>& E, const std::vector<Vec<K>>& elems);

template <class K>
bool check_unit(const Algebra<K>& E);
template <class K>
bool check_associative(const Algebra<K>& E);
template <class K>
bool is_commutative(const Algebra<K>& E);

/// Same algebra in a new basis; columns of P are the new basis vectors.
template <class K>
Algebra<K> change_basis(const Algebra<K>& E, const Mat<K>& P);

template <class K>
Mat<K> columns(const Field<K>& F, const std::vector<Vec<K>>& vs, Index rows) {
  Mat<K> M = zeros(F, rows, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) M.col(static_cast<Index>(j)) = vs[j];
  return M;
}

std::string monomial_label(const std::string& var, int e);

}  // namespace artin
