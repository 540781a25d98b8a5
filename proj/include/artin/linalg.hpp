#pragma once

#include <optional>
#include <vector>

#include "artin/field.hpp"

namespace artin {

using Index = Eigen::Index;

/// Reduced row echelon form. Pivot order is the first nonzero entry; no
/// pivoting heuristics, so results are deterministic.
template <class K>
struct Rref {
  Mat<K> R;
  std::vector<Index> pivots;  // pivot column of row i, i < rank
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class K>
Rref<K> rref(const Field<K>& F, Mat<K> A) {
  Index r = 0;
  std::vector<Index> piv;
  for (Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    Index s = r;
    while (s < A.rows() && A(s, c).is_zero()) ++s;
    if (s == A.rows()) continue;
    if (s != r) A.row(s).swap(A.row(r));
    K inv = A(r, c).inv();
    for (Index j = c; j < A.cols(); ++j) A(r, j) = F.typed(A(r, j) * inv);
    for (Index i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, c).is_zero()) continue;
      K m = A(i, c);
      for (Index j = c; j < A.cols(); ++j)
        if (!A(r, j).is_zero()) A(i, j) -= m * A(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  retype(F, A);
  return {std::move(A), std::move(piv)};
}

/// Raw-residue kernel; bit-packed when p = 2.
Rref<Fp> rref(const Field<Fp>& F, Mat<Fp> A);
/// Fraction-free Gauss-Jordan over F2[u,v]; entries stay minors of the input.
Rref<Rf2> rref(const Field<Rf2>& F, Mat<Rf2> A);

template <class K>
Index rank(const Field<K>& F, const Mat<K>& A) {
  return rref(F, A).rank();
}

/// Columns form a basis of {x : A x = 0}.
template <class K>
Mat<K> nullspace(const Field<K>& F, const Mat<K>& A) {
  Rref<K> e = rref(F, A);
  const Index n = A.cols();
  std::vector<bool> is_piv(n, false);
  for (Index c : e.pivots) is_piv[c] = true;
  Mat<K> N = zeros(F, n, n - e.rank());
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    N(f, k) = F.one();
    for (Index i = 0; i < e.rank(); ++i) N(e.pivots[i], k) = -e.R(i, f);
    ++k;
  }
  retype(F, N);
  return N;
}

/// One solution of A x = b, if any.
template <class K>
std::optional<Vec<K>> solve(const Field<K>& F, const Mat<K>& A, const Vec<K>& b) {
  Mat<K> aug(A.rows(), A.cols() + 1);
  aug << A, b;
  Rref<K> e = rref(F, aug);
  if (e.rank() > 0 && e.pivots.back() == A.cols()) return std::nullopt;
  Vec<K> x = zero_vec(F, A.cols());
  for (Index i = 0; i < e.rank(); ++i) x(e.pivots[i]) = e.R(i, A.cols());
  return x;
}

template <class K>
std::optional<Mat<K>> inverse(const Field<K>& F, const Mat<K>& P) {
  const Index n = P.rows();
  if (P.cols() != n) return std::nullopt;
  Mat<K> aug(n, 2 * n);
  aug << P, identity(F, n);
  Rref<K> e = rref(F, aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return Mat<K>(e.R.rightCols(n));
}

/// Linear span kept as a reduced column-echelon basis: column j has a 1 in
/// row pivots[j], zeros above it and zeros in every other pivot row.
template <class K>
struct Subspace {
  Mat<K> basis;
  std::vector<Index> pivots;

  Index dim() const { return basis.cols(); }
  Index ambient() const { return basis.rows(); }

  /// v minus its projection along the basis; zero iff v is in the span.
  Vec<K> reduce(Vec<K> v) const {
    for (Index j = 0; j < dim(); ++j) {
      K c = v(pivots[j]);
      if (c.is_zero()) continue;
      for (Index i = pivots[j]; i < ambient(); ++i)
        if (!basis(i, j).is_zero()) v(i) -= c * basis(i, j);
    }
    return v;
  }
  bool contains(const Vec<K>& v) const { return is_zero_mat(reduce(v)); }
  /// Coordinates of a member; read straight off the pivot rows.
  Vec<K> coords(const Vec<K>& v) const {
    Vec<K> c(dim());
    for (Index j = 0; j < dim(); ++j) c(j) = v(pivots[j]);
    return c;
  }
  bool contains_all(const Mat<K>& M) const {
    for (Index j = 0; j < M.cols(); ++j)
      if (!contains(M.col(j))) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.pivots == b.pivots && a.basis == b.basis;
  }
};

template <class K>
Subspace<K> span(const Field<K>& F, const Mat<K>& gens) {
  Rref<K> e = rref(F, Mat<K>(gens.transpose()));
  Subspace<K> S;
  S.basis = e.R.topRows(e.rank()).transpose();
  S.pivots = e.pivots;
  return S;
}

template <class K>
Subspace<K> zero_space(const Field<K>& F, Index n) {
  return {zeros(F, n, 0), {}};
}

template <class K>
Subspace<K> full_space(const Field<K>& F, Index n) {
  Subspace<K> S{identity(F, n), {}};
  for (Index i = 0; i < n; ++i) S.pivots.push_back(i);
  return S;
}

template <class K>
Subspace<K> sum(const Field<K>& F, const Subspace<K>& a, const Subspace<K>& b) {
  Mat<K> g(a.ambient(), a.dim() + b.dim());
  g << a.basis, b.basis;
  return span(F, g);
}

template <class K>
Subspace<K> intersect(const Field<K>& F, const Subspace<K>& a, const Subspace<K>& b) {
  // x in a ∩ b  <=>  a.basis y = b.basis z
  Mat<K> g(a.ambient(), a.dim() + b.dim());
  g << a.basis, -b.basis;
  Mat<K> N = nullspace(F, g);
  return span(F, Mat<K>(a.basis * N.topRows(a.dim())));
}

/// Rows C with C v = 0 exactly when v lies in S.
template <class K>
Mat<K> annihilator(const Field<K>& F, const Subspace<K>& S) {
  const Index n = S.ambient();
  std::vector<bool> is_piv(n, false);
  for (Index p : S.pivots) is_piv[p] = true;
  Mat<K> C = zeros(F, n - S.dim(), n);
  Index r = 0;
  for (Index i = 0; i < n; ++i) {
    if (is_piv[i]) continue;
    C(r, i) = F.one();
    for (Index j = 0; j < S.dim(); ++j)
      if (!S.basis(i, j).is_zero()) C(r, S.pivots[j]) = -S.basis(i, j);
    ++r;
  }
  retype(F, C);
  return C;
}

template <class K>
Mat<K> hstack(const std::vector<Mat<K>>& parts, Index rows) {
  Index cols = 0;
  for (auto& p : parts) cols += p.cols();
  Mat<K> out(rows, cols);
  Index c = 0;
  for (auto& p : parts) {
    out.middleCols(c, p.cols()) = p;
    c += p.cols();
  }
  return out;
}

template <class K>
Mat<K> vstack(const std::vector<Mat<K>>& parts, Index cols) {
  Index rows = 0;
  for (auto& p : parts) rows += p.rows();
  Mat<K> out(rows, cols);
  Index r = 0;
  for (auto& p : parts) {
    out.middleRows(r, p.rows()) = p;
    r += p.rows();
  }
  return out;
}

/// Exact matrix product that skips zero entries (typed result).
template <class K>
Mat<K> mul(const Field<K>& F, const Mat<K>& A, const Mat<K>& B) {
  Mat<K> C = zeros(F, A.rows(), B.cols());
  for (Index j = 0; j < B.cols(); ++j)
    for (Index k = 0; k < A.cols(); ++k) {
      const K& b = B(k, j);
      if (b.is_zero()) continue;
      for (Index i = 0; i < A.rows(); ++i)
        if (!A(i, k).is_zero()) C(i, j) += A(i, k) * b;
    }
  return C;
}

}  // namespace artin
