#include "artin/algebra.hpp"

namespace artin {

std::string monomial_label(const std::string& var, int e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

template <class K>
Algebra<K> make_truncated_poly_algebra(const Field<K>& F, Index n, const std::string& var) {
  if (n < 1) throw Error(Errc::DimensionTooSmall, "truncated polynomial algebra needs n >= 1");
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(monomial_label(var, static_cast<int>(i)));
  auto rule = [&](Index i, Index j) {
    return i + j < n ? unit_vec(F, n, i + j) : zero_vec(F, n);
  };
  Algebra<K> E = make_algebra(F, labels, rule, unit_vec(F, n, 0));
  E.components = {{0, n}};
  return E;
}

template <class K>
Algebra<K> make_monomial_quotient(const Field<K>& F, const std::vector<std::pair<int, int>>& gens) {
  int ax = -1, by = -1;
  for (auto [a, b] : gens) {
    if (a < 0 || b < 0) throw Error(Errc::ParseError, "negative exponent in monomial ideal");
    if (b == 0 && (ax < 0 || a < ax)) ax = a;
    if (a == 0 && (by < 0 || b < by)) by = b;
  }
  if (ax < 0 || by < 0)
    throw Error(Errc::InfiniteDimension, "monomial ideal needs pure powers of both X and Y");
  auto in_ideal = [&](int i, int j) {
    for (auto [a, b] : gens)
      if (i >= a && j >= b) return true;
    return false;
  };
  // graded order, larger X-degree first within a degree
  std::vector<std::pair<int, int>> mons;
  for (int d = 0; d <= ax + by; ++d)
    for (int i = d; i >= 0; --i)
      if (i < ax && d - i < by && !in_ideal(i, d - i)) mons.push_back({i, d - i});
  if (mons.empty()) throw Error(Errc::DimensionTooSmall, "the ideal contains 1");
  const Index n = static_cast<Index>(mons.size());
  std::vector<std::string> labels;
  for (auto [i, j] : mons) {
    if (i == 0 && j == 0) labels.push_back("1");
    else if (i == 0) labels.push_back(monomial_label("Y", j));
    else if (j == 0) labels.push_back(monomial_label("X", i));
    else labels.push_back(monomial_label("X", i) + "*" + monomial_label("Y", j));
  }
  auto find = [&](int i, int j) -> Index {
    for (Index k = 0; k < n; ++k)
      if (mons[k] == std::pair<int, int>{i, j}) return k;
    return -1;
  };
  auto rule = [&](Index a, Index b) {
    Index k = find(mons[a].first + mons[b].first, mons[a].second + mons[b].second);
    return k >= 0 ? unit_vec(F, n, k) : zero_vec(F, n);
  };
  Algebra<K> E = make_algebra(F, labels, rule, unit_vec(F, n, 0));
  E.components = {{0, n}};
  return E;
}

template <class K>
Algebra<K> product_algebra(const std::vector<Algebra<K>>& factors) {
  if (factors.empty()) throw Error(Errc::DimensionTooSmall, "empty product");
  const Field<K>& F = factors[0].field;
  Algebra<K> P(F);
  for (auto& f : factors) {
    if (f.field != F) throw Error(Errc::MixedFields, "factors over different fields");
    P.components.push_back({P.dim, f.dim});
    P.dim += f.dim;
  }
  P.table.resize(P.dim * P.dim);
  P.one = P.zero();
  const bool tag = factors.size() > 1;
  for (std::size_t c = 0; c < factors.size(); ++c) {
    const auto& f = factors[c];
    const Index off = P.components[c].first;
    for (Index i = 0; i < f.dim; ++i) {
      P.labels.push_back(tag ? "(" + f.labels[i] + ")_" + std::to_string(c + 1) : f.labels[i]);
      P.one(off + i) = f.one(i);
      for (Index j = 0; j < f.dim; ++j)
        for (const auto& [m, v] : f.entry(i, j)) P.table[(off + i) * P.dim + off + j].push_back({off + m, v});
    }
  }
  retype(F, P.one);
  return P;
}

template <class K>
std::vector<Vec<K>> component_idempotents(const Algebra<K>& B) {
  if (!B.has_components()) throw Error(Errc::NotAProduct, "algebra carries no product structure");
  std::vector<Vec<K>> out;
  for (auto [off, len] : B.components) {
    Vec<K> e = B.zero();
    e.segment(off, len) = B.one.segment(off, len);
    out.push_back(e);
  }
  return out;
}

template <class K>
Subalgebra<K> algebra_on_subspace(const Algebra<K>& E, const Subspace<K>& S, const Vec<K>& unit) {
  const Field<K>& F = E.field;
  const Index d = S.dim();
  std::vector<std::string> labels;
  for (Index i = 0; i < d; ++i) labels.push_back("a" + std::to_string(i));
  auto rule = [&](Index i, Index j) {
    Vec<K> p = E.mul(S.basis.col(i), S.basis.col(j));
    if (!S.contains(p)) throw Error(Errc::InvariantViolation, "subspace is not closed under products");
    return Vec<K>(S.coords(p));
  };
  if (!S.contains(unit)) throw Error(Errc::InvariantViolation, "unit outside the subspace");
  Algebra<K> A = make_algebra(F, labels, rule, Vec<K>(S.coords(unit)));
  return {std::move(A), S.basis, S};
}

template <class K>
Subalgebra<K> subalgebra_generated(const Algebra<K>& B, const std::vector<Vec<K>>& gens) {
  const Field<K>& F = B.field;
  // words in the generators: close span{1} under left multiplication by gens
  std::vector<Vec<K>> acc{B.one};
  Subspace<K> S = span(F, columns(F, acc, B.dim));
  for (;;) {
    std::vector<Vec<K>> next;
    for (Index j = 0; j < S.dim(); ++j) {
      next.push_back(S.basis.col(j));
      for (auto& g : gens) next.push_back(B.mul(g, S.basis.col(j)));
    }
    Subspace<K> T = span(F, columns(F, next, B.dim));
    if (T.dim() == S.dim()) break;
    S = std::move(T);
  }
  return algebra_on_subspace(B, S, B.one);
}

template <class K>
Subalgebra<K> corner_algebra(const Algebra<K>& E, const Vec<K>& e) {
  std::vector<Vec<K>> g;
  for (Index i = 0; i < E.dim; ++i) g.push_back(E.mul(E.mul(e, E.basis(i)), e));
  return algebra_on_subspace(E, span(E.field, columns(E.field, g, E.dim)), e);
}

template <class K>
bool is_two_sided_ideal(const Algebra<K>& E, const Subspace<K>& I) {
  for (Index j = 0; j < I.dim(); ++j) {
    Vec<K> x = I.basis.col(j);
    for (Index i = 0; i < E.dim; ++i) {
      if (!I.contains(E.mul(E.basis(i), x))) return false;
      if (!I.contains(E.mul(x, E.basis(i)))) return false;
    }
  }
  return true;
}

template <class K>
Quotient<K> quotient_by_ideal(const Algebra<K>& E, const Subspace<K>& I) {
  const Field<K>& F = E.field;
  if (!is_two_sided_ideal(E, I)) throw Error(Errc::NotAnIdeal, "subspace is not a two-sided ideal");
  std::vector<bool> is_piv(E.dim, false);
  for (Index p : I.pivots) is_piv[p] = true;
  std::vector<Index> keep;
  for (Index i = 0; i < E.dim; ++i)
    if (!is_piv[i]) keep.push_back(i);
  const Index q = static_cast<Index>(keep.size());
  if (q == 0) throw Error(Errc::NotAnIdeal, "the ideal is the whole algebra");
  Mat<K> proj = zeros(F, q, E.dim), lift = zeros(F, E.dim, q);
  for (Index k = 0; k < q; ++k) lift(keep[k], k) = F.one();
  // pi(v) = non-pivot coordinates of v reduced modulo I
  for (Index i = 0; i < E.dim; ++i) {
    Vec<K> r = I.reduce(E.basis(i));
    for (Index k = 0; k < q; ++k) proj(k, i) = r(keep[k]);
  }
  auto project = [&](const Vec<K>& v) { return Vec<K>(mul(F, proj, Mat<K>(v))); };
  std::vector<std::string> labels;
  for (Index k : keep) labels.push_back(E.labels[k]);
  auto rule = [&](Index a, Index b) { return project(E.mul(E.basis(keep[a]), E.basis(keep[b]))); };
  Algebra<K> Q = make_algebra(F, labels, rule, project(E.one));
  // the product structure survives when the ideal is componentwise
  if (E.has_components()) {
    bool split = true;
    for (Index j = 0; j < I.dim() && split; ++j) {
      int hit = -1;
      for (std::size_t c = 0; c < E.components.size(); ++c) {
        auto [off, len] = E.components[c];
        if (!is_zero_mat(I.basis.col(j).segment(off, len))) {
          if (hit >= 0) split = false;
          hit = static_cast<int>(c);
        }
      }
    }
    if (split) {
      Index off = 0;
      for (auto [o, len] : E.components) {
        Index n = 0;
        for (Index k : keep)
          if (k >= o && k < o + len) ++n;
        if (n > 0) Q.components.push_back({off, n});
        off += n;
      }
      if (Q.components.size() != E.components.size()) Q.components.clear();
    }
  }
  return {std::move(Q), std::move(proj), std::move(lift)};
}

template <class K>
Subspace<K> product_space(const Algebra<K>& E, const Subspace<K>& X, const Subspace<K>& Y) {
  std::vector<Vec<K>> g;
  for (Index i = 0; i < X.dim(); ++i)
    for (Index j = 0; j < Y.dim(); ++j) g.push_back(E.mul(X.basis.col(i), Y.basis.col(j)));
  if (g.empty()) return zero_space(E.field, E.dim);
  return span(E.field, columns(E.field, g, E.dim));
}

template <class K>
UPoly<K> min_poly(const Algebra<K>& E, const Vec<K>& a) {
  const Field<K>& F = E.field;
  std::vector<Vec<K>> pw{E.one};
  Subspace<K> S = span(F, columns(F, pw, E.dim));
  for (;;) {
    Vec<K> next = E.mul(pw.back(), a);
    if (S.contains(next)) {
      // solve next = sum c_j a^j over the powers found so far
      auto c = solve(F, columns(F, pw, E.dim), next);
      std::vector<K> co;
      for (Index j = 0; j < c->size(); ++j) co.push_back(-(*c)(j));
      co.push_back(F.one());
      return UPoly<K>(std::move(co));
    }
    pw.push_back(next);
    S = sum(F, S, span(F, Mat<K>(next)));
  }
}

template <class K>
Vec<K> eval_poly(const Algebra<K>& E, const UPoly<K>& f, const Vec<K>& a) {
  Vec<K> r = E.zero();
  for (int i = f.degree(); i >= 0; --i) {
    r = E.mul(r, a);
    r += E.one * f.c[i];
  }
  retype(E.field, r);
  return r;
}

template <class K>
bool check_linear_independence(const Algebra<K>& E, const std::vector<Vec<K>>& elems) {
  if (elems.empty()) return true;
  return rank(E.field, columns(E.field, elems, E.dim)) == static_cast<Index>(elems.size());
}

template <class K>
bool check_unit(const Algebra<K>& E) {
  for (Index i = 0; i < E.dim; ++i) {
    Vec<K> b = E.basis(i);
    if (E.mul(E.one, b) != b || E.mul(b, E.one) != b) return false;
  }
  return true;
}

template <class K>
bool check_associative(const Algebra<K>& E) {
  for (Index i = 0; i < E.dim; ++i)
    for (Index j = 0; j < E.dim; ++j) {
      Vec<K> ij = E.mul(E.basis(i), E.basis(j));
      for (Index k = 0; k < E.dim; ++k)
        if (E.mul(ij, E.basis(k)) != E.mul(E.basis(i), E.mul(E.basis(j), E.basis(k)))) return false;
    }
  return true;
}

template <class K>
bool is_commutative(const Algebra<K>& E) {
  for (Index i = 0; i < E.dim; ++i)
    for (Index j = i + 1; j < E.dim; ++j)
      if (E.mul(E.basis(i), E.basis(j)) != E.mul(E.basis(j), E.basis(i))) return false;
  return true;
}

template <class K>
Algebra<K> change_basis(const Algebra<K>& E, const Mat<K>& P) {
  auto Pi = inverse(E.field, P);
  if (!Pi) throw Error(Errc::InvariantViolation, "basis change matrix is singular");
  std::vector<std::string> labels;
  for (Index i = 0; i < E.dim; ++i) labels.push_back("c" + std::to_string(i));
  auto rule = [&](Index a, Index b) {
    Vec<K> p = E.mul(P.col(a), P.col(b));
    return Vec<K>(mul(E.field, *Pi, Mat<K>(p)));
  };
  return make_algebra(E.field, labels, rule, Vec<K>(mul(E.field, *Pi, Mat<K>(E.one))));
}

#define ARTIN_INSTANTIATE(K)                                                                          \
  template Algebra<K> make_truncated_poly_algebra(const Field<K>&, Index, const std::string&);      \
  template Algebra<K> make_monomial_quotient(const Field<K>&, const std::vector<std::pair<int, int>>&); \
  template Algebra<K> product_algebra(const std::vector<Algebra<K>>&);                              \
  template std::vector<Vec<K>> component_idempotents(const Algebra<K>&);                            \
  template Subalgebra<K> algebra_on_subspace(const Algebra<K>&, const Subspace<K>&, const Vec<K>&); \
  template Subalgebra<K> subalgebra_generated(const Algebra<K>&, const std::vector<Vec<K>>&);       \
  template Subalgebra<K> corner_algebra(const Algebra<K>&, const Vec<K>&);                          \
  template bool is_two_sided_ideal(const Algebra<K>&, const Subspace<K>&);                          \
  template Quotient<K> quotient_by_ideal(const Algebra<K>&, const Subspace<K>&);                    \
  template Subspace<K> product_space(const Algebra<K>&, const Subspace<K>&, const Subspace<K>&);    \
  template UPoly<K> min_poly(const Algebra<K>&, const Vec<K>&);                                     \
  template Vec<K> eval_poly(const Algebra<K>&, const UPoly<K>&, const Vec<K>&);                     \
  template bool check_linear_independence(const Algebra<K>&, const std::vector<Vec<K>>&);           \
  template bool check_unit(const Algebra<K>&);                                                      \
  template bool check_associative(const Algebra<K>&);                                               \
  template bool is_commutative(const Algebra<K>&);                                                  \
  template Algebra<K> change_basis(const Algebra<K>&, const Mat<K>&);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
