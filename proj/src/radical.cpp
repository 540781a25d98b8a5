#include "artin/radical.hpp"

#include <type_traits>

namespace artin {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Local: return "local";
    case Verdict::NotLocal: return "not_local";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

template <class K>
std::uint64_t enumeration_size(const Field<K>& F, Index dim, std::uint64_t cap) {
  if (!F.is_finite()) return 0;
  std::uint64_t n = 1;
  for (Index i = 0; i < dim; ++i) {
    if (n > cap / F.order()) return 0;
    n *= F.order();
  }
  return n;
}

template <class K>
bool is_idempotent(const Algebra<K>& E, const Vec<K>& e) {
  return E.mul(e, e) == e;
}

template <class K>
bool is_trivial(const Algebra<K>& E, const Vec<K>& e) {
  return is_zero_mat(e) || e == E.one;
}

std::optional<Vec<Fp>> exhaustive_idempotent(const Algebra<Fp>& E, std::uint64_t* count) {
  const Index n = E.dim;
  const std::uint32_t p = E.field.p();
  struct T { int j, m; std::uint32_t c; };
  std::vector<std::vector<T>> rows(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [m, c] : E.entry(i, j))
        rows[i].push_back({static_cast<int>(j), static_cast<int>(m), static_cast<std::uint32_t>(c.value())});
  std::vector<std::uint32_t> one(n);
  for (Index i = 0; i < n; ++i) one[i] = static_cast<std::uint32_t>(E.field.typed(E.one(i)).value());
  std::vector<std::uint32_t> x(n, 0);
  std::vector<std::uint64_t> sq(n);
  std::optional<Vec<Fp>> found;
  std::uint64_t total = 0;
  for (;;) {
    std::fill(sq.begin(), sq.end(), 0);
    for (Index i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (const T& t : rows[i])
        if (x[t.j]) sq[t.m] = (sq[t.m] + std::uint64_t{x[i]} * x[t.j] % p * t.c) % p;
    }
    bool idem = true;
    for (Index i = 0; i < n && idem; ++i) idem = sq[i] == x[i];
    if (idem) {
      ++total;
      bool trivial = x == one || std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; });
      if (!trivial && !found) {
        Vec<Fp> e(n);
        for (Index i = 0; i < n; ++i) e(i) = E.field.from_int(x[i]);
        found = e;
        if (!count) return found;
      }
    }
    Index k = 0;
    while (k < n && ++x[k] == p) x[k++] = 0;
    if (k == n) break;
  }
  if (count) *count = total;
  return found;
}

namespace {

template <class K>
std::optional<Vec<K>> idempotent_from_split(const Algebra<K>& E, const Vec<K>& a, const UPoly<K>& g,
                                            const UPoly<K>& h) {
  auto [d, s, t] = xgcd(g, h);
  if (d.degree() != 0) return std::nullopt;
  Vec<K> e = eval_poly(E, s * g, a);
  if (!is_idempotent(E, e) || is_trivial(E, e)) return std::nullopt;
  return e;
}

/// f = (x - c)^m * rest with m >= 1 and rest nonconstant.
template <class K>
std::optional<std::pair<UPoly<K>, UPoly<K>>> root_split(const Field<K>& F, const UPoly<K>& f, const K& c) {
  UPoly<K> lin({-c, F.one()});
  UPoly<K> g = constant_poly(F.one()), rest = f;
  for (;;) {
    auto [q, r] = divmod(rest, lin);
    if (!r.is_zero()) break;
    g = g * lin;
    rest = q;
  }
  if (g.degree() < 1 || rest.degree() < 1) return std::nullopt;
  return std::pair{g, rest};
}

}  // namespace

template <class K>
std::optional<Vec<K>> split_from_element(const Algebra<K>& E, const Vec<K>& a) {
  const Field<K>& F = E.field;
  UPoly<K> f = min_poly(E, a);
  if (f.degree() <= 1) return std::nullopt;
  if constexpr (std::is_same_v<K, Fp>) {
    auto fs = factor_univariate(F, f);
    if (fs.size() < 2) return std::nullopt;
    UPoly<K> g = constant_poly(F.one());
    for (int k = 0; k < fs[0].mult; ++k) g = g * fs[0].f;
    return idempotent_from_split(E, a, g, divmod(f, g).first);
  } else {
    for (const K& c : {F.zero(), F.one()})
      if (auto s = root_split(F, f, c))
        if (auto e = idempotent_from_split(E, a, s->first, s->second)) return e;
    return std::nullopt;
  }
}

template <class K>
std::optional<Vec<K>> search_split_idempotent(const Algebra<K>& E, std::uint64_t trials, Rng& rng) {
  for (Index i = 0; i < E.dim; ++i)
    if (auto e = split_from_element(E, E.basis(i))) return e;
  if (E.dim <= 24)
    for (Index i = 0; i < E.dim; ++i)
      for (Index j = i + 1; j < E.dim; ++j)
        if (auto e = split_from_element(E, Vec<K>(E.basis(i) + E.basis(j)))) return e;
  for (std::uint64_t t = 0; t < trials; ++t)
    if (auto e = split_from_element(E, random_vec(E.field, E.dim, rng))) return e;
  return std::nullopt;
}

namespace {

using IMat = std::vector<std::int64_t>;

IMat imul(const IMat& A, const IMat& B, Index n, std::int64_t mod) {
  IMat C(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      std::int64_t a = A[i * n + k];
      if (!a) continue;
      for (Index j = 0; j < n; ++j) C[i * n + j] = (C[i * n + j] + a * B[k * n + j]) % mod;
    }
  return C;
}

/// Tr(L^(p^i)) mod p^(i+1), L an integer lift of a matrix over F_p.
std::int64_t trace_ppow(IMat L, Index n, std::uint32_t p, int i, std::int64_t mod) {
  for (int s = 0; s < i; ++s) {
    // L <- L^p
    IMat R, B = L;
    bool have = false;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) {
        R = have ? imul(R, B, n, mod) : B;
        have = true;
      }
      if (e >> 1) B = imul(B, B, n, mod);
    }
    L = std::move(R);
  }
  std::int64_t t = 0;
  for (Index k = 0; k < n; ++k) t = (t + L[k * n + k]) % mod;
  return t;
}

IMat lift_matrix(const Mat<Fp>& M) {
  const Index n = M.rows();
  IMat L(static_cast<std::size_t>(n * n));
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) L[r * n + c] = M(r, c).value();
  return L;
}

}  // namespace

Subspace<Fp> radical(const Algebra<Fp>& E) {
  const Field<Fp>& F = E.field;
  const Index n = E.dim;
  const std::uint32_t p = F.p();
  int l = 0;
  for (std::int64_t q = p; q <= n; q *= p) ++l;
  Subspace<Fp> I = full_space(F, n);
  std::int64_t pi = 1;  // p^i
  for (int i = 0; i <= l && I.dim() > 0; ++i, pi *= p) {
    const std::int64_t mod = pi * p;
    // g_i on the basis of I, extended linearly to I
    Vec<Fp> g(I.dim());
    for (Index k = 0; k < I.dim(); ++k) {
      std::int64_t t = trace_ppow(lift_matrix(E.left_mult(I.basis.col(k))), n, p, i, mod);
      if (t % pi != 0) throw Error(Errc::InvariantViolation, "trace not divisible in the radical chain");
      g(k) = F.from_int(t / pi);
    }
    Mat<Fp> M = zeros(F, n, I.dim());
    for (Index k = 0; k < I.dim(); ++k)
      for (Index j = 0; j < n; ++j) {
        Vec<Fp> z = E.mul(I.basis.col(k), E.basis(j));
        Vec<Fp> c = I.coords(z);
        Fp s = F.zero();
        for (Index m = 0; m < I.dim(); ++m) s += c(m) * g(m);
        M(j, k) = s;
      }
    Mat<Fp> N = nullspace(F, M);
    I = N.cols() ? span(F, mul(F, I.basis, N)) : zero_space(F, n);
  }
  return I;
}

Subspace<Fp> radical_trace_form(const Algebra<Fp>& E) {
  const Field<Fp>& F = E.field;
  const Index n = E.dim;
  Vec<Fp> tr(n);
  for (Index m = 0; m < n; ++m) tr(m) = E.left_mult(E.basis(m)).trace();
  Mat<Fp> T = zeros(F, n, n);
  for (Index k = 0; k < n; ++k)
    for (Index j = 0; j < n; ++j) {
      Fp s = F.zero();
      for (const auto& [m, c] : E.entry(k, j)) s += c * tr(m);
      T(j, k) = s;
    }
  Mat<Fp> N = nullspace(F, T);
  return N.cols() ? span(F, N) : zero_space(F, n);
}

Subspace<Rf2> radical(const Algebra<Rf2>&) {
  throw Error(Errc::UnsupportedField, "radical() needs a prime field; use nilradical_commutative");
}

Subspace<Rf2> nilradical_commutative(const Algebra<Rf2>& E) {
  const Field<Rf2>& F = E.field;
  const Index n = E.dim;
  std::vector<Vec<Rf2>> sq;
  for (Index i = 0; i < n; ++i) sq.push_back(E.mul(E.basis(i), E.basis(i)));
  Subspace<Rf2> K = zero_space(F, n);
  for (;;) {
    // x = sum c_i e_i has x^2 = sum c_i^2 e_i^2; split each coefficient over k^2
    Mat<Rf2> C = annihilator(F, K);
    Mat<Rf2> A = zeros(F, 4 * C.rows(), n);
    for (Index i = 0; i < n; ++i) {
      Mat<Rf2> y = mul(F, C, Mat<Rf2>(sq[i]));
      for (Index r = 0; r < C.rows(); ++r) {
        if (y(r, 0).is_zero()) continue;
        auto fc = y(r, 0).frobenius_coords();
        for (int j = 0; j < 4; ++j) A(4 * r + j, i) = fc[j];
      }
    }
    Mat<Rf2> N = nullspace(F, A);
    Subspace<Rf2> next = N.cols() ? span(F, N) : zero_space(F, n);
    if (next.dim() == K.dim()) return K;
    K = std::move(next);
  }
}

bool squares_into_scalars(const Algebra<Rf2>& E) {
  Subspace<Rf2> k1 = span(E.field, Mat<Rf2>(E.one));
  for (Index i = 0; i < E.dim; ++i)
    if (!k1.contains(E.mul(E.basis(i), E.basis(i)))) return false;
  return true;
}

template <class K>
int nilpotency_index(const Algebra<K>& E, const Subspace<K>& I) {
  Subspace<K> P = I;
  int k = 1;
  while (P.dim() > 0) {
    P = product_space(E, P, I);
    if (++k > E.dim + 1) return -1;
  }
  return k;
}

template <class K>
Vec<K> lift_idempotent(const Algebra<K>& E, Vec<K> e) {
  const std::uint32_t p = E.field.characteristic();
  for (int it = 0; it < 64 && !is_idempotent(E, e); ++it) {
    if (p == 2 || p == 3) {
      e = E.pow(e, p);
    } else {
      Vec<K> e2 = E.mul(e, e);
      Vec<K> e3 = E.mul(e2, e);
      e = e2 * E.field.from_int(3) - e3 * E.field.from_int(2);
    }
  }
  if (!is_idempotent(E, e)) throw Error(Errc::InvariantViolation, "idempotent lifting did not converge");
  return e;
}

namespace {

template <class K>
LocalResult<K> not_local(std::optional<Vec<K>> e, std::string rung, std::string note) {
  LocalResult<K> r;
  r.verdict = Verdict::NotLocal;
  r.idempotent = std::move(e);
  r.rung = std::move(rung);
  r.note = std::move(note);
  return r;
}

template <class K>
LocalResult<K> local(std::string rung, std::string note) {
  LocalResult<K> r;
  r.verdict = Verdict::Local;
  r.rung = std::move(rung);
  r.note = std::move(note);
  return r;
}

}  // namespace

LocalResult<Fp> is_local(const Algebra<Fp>& E, const Budget& budget) {
  if (enumeration_size(E.field, E.dim, budget.enumeration) > 0) {
    auto e = exhaustive_idempotent(E);
    if (e) return not_local<Fp>(e, "L1", "exhaustive scan");
    return local<Fp>("L1", "exhaustive scan");
  }
  Rng rng(budget.seed);
  if (auto e = search_split_idempotent(E, std::min<std::uint64_t>(budget.trials, 32), rng))
    return not_local<Fp>(e, "L2", "minimal polynomial splits");
  Subspace<Fp> rad = radical(E);
  if (E.dim - rad.dim() == 1) return local<Fp>("L2", "quotient by the radical is k");
  Quotient<Fp> Q = quotient_by_ideal(E, rad);
  const Algebra<Fp>& S = Q.alg;
  auto lift = [&](const Vec<Fp>& eS) {
    return lift_idempotent(E, Vec<Fp>(mul(E.field, Q.lift, Mat<Fp>(eS))));
  };
  if (!is_commutative(S)) {
    // a noncommutative semisimple algebra over a finite field is not a division ring
    if (auto eS = search_split_idempotent(S, budget.trials, rng))
      return not_local<Fp>(lift(*eS), "L2", "noncommutative semisimple quotient");
    return not_local<Fp>(std::nullopt, "L2", "noncommutative semisimple quotient; no witness found");
  }
  // Berlekamp subalgebra: fixed points of Frobenius count the field factors
  Mat<Fp> Fr = zeros(S.field, S.dim, S.dim);
  for (Index i = 0; i < S.dim; ++i) Fr.col(i) = S.pow(S.basis(i), S.field.p());
  Mat<Fp> B = nullspace(S.field, Mat<Fp>(Fr - identity(S.field, S.dim)));
  if (B.cols() == 1) return local<Fp>("L2", "semisimple quotient is a field");
  Subspace<Fp> k1 = span(S.field, Mat<Fp>(S.one));
  for (Index j = 0; j < B.cols(); ++j) {
    if (k1.contains(B.col(j))) continue;
    if (auto eS = split_from_element(S, Vec<Fp>(B.col(j))))
      return not_local<Fp>(lift(*eS), "L2", "semisimple quotient splits");
  }
  throw Error(Errc::InvariantViolation, "Berlekamp subalgebra did not yield an idempotent");
}

LocalResult<Rf2> is_local(const Algebra<Rf2>& E, const Budget& budget) {
  Rng rng(budget.seed);
  if (auto e = search_split_idempotent(E, std::min<std::uint64_t>(budget.trials, 32), rng))
    return not_local<Rf2>(e, "L3", "minimal polynomial splits");
  LocalResult<Rf2> und;
  und.rung = "L3";
  if (!is_commutative(E)) {
    und.note = "noncommutative over F2(u,v)";
    return und;
  }
  Subspace<Rf2> N = nilradical_commutative(E);
  if (E.dim - N.dim() == 1) return local<Rf2>("L3", "quotient by the nilradical is k");
  Quotient<Rf2> Q = quotient_by_ideal(E, N);
  if (squares_into_scalars(Q.alg)) return local<Rf2>("L3", "reduced quotient with squares in k is a field");
  if (auto eS = search_split_idempotent(Q.alg, budget.trials, rng))
    return not_local<Rf2>(lift_idempotent(E, Vec<Rf2>(mul(E.field, Q.lift, Mat<Rf2>(*eS)))), "L3",
                          "reduced quotient splits");
  und.note = "reduced quotient not resolved";
  return und;
}

#define ARTIN_INSTANTIATE(K)                                                                       \
  template std::uint64_t enumeration_size(const Field<K>&, Index, std::uint64_t);                \
  template bool is_idempotent(const Algebra<K>&, const Vec<K>&);                                 \
  template bool is_trivial(const Algebra<K>&, const Vec<K>&);                                    \
  template std::optional<Vec<K>> split_from_element(const Algebra<K>&, const Vec<K>&);           \
  template std::optional<Vec<K>> search_split_idempotent(const Algebra<K>&, std::uint64_t, Rng&); \
  template int nilpotency_index(const Algebra<K>&, const Subspace<K>&);                          \
  template Vec<K> lift_idempotent(const Algebra<K>&, Vec<K>);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
