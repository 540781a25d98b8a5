#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "artin/functors.hpp"
#include "artin/hom.hpp"

using namespace artin;

namespace {

Vec<Fp> vec(const Field<Fp>& F, std::vector<int> c) {
  Vec<Fp> v(static_cast<Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Index>(i)) = F.from_int(c[i]);
  return v;
}

// k -> k[t]/(t^3) x k
PairPtr<Fp> reduced_pair(const Field<Fp>& F) {
  Algebra<Fp> B = product_algebra<Fp>({make_truncated_poly_algebra(F, 3), make_truncated_poly_algebra(F, 1)});
  return make_pair(B, {B.one});
}

PairPtr<Fp> field_into(const Algebra<Fp>& D) { return make_pair(D, {D.one}); }

// V_T = span{1, t + T t^3} in k[t]/(t^4)
PairModule<Fp> v_t(PairPtr<Fp> P, int T) {
  const Field<Fp>& F = P->field();
  return make_module(P, {1}, {vec(F, {1, 0, 0, 0}), vec(F, {0, 1, 0, T})});
}

// dim Hom by enumerating every block map; needs |k|^size small.
Index brute_hom_dim(const PairModule<Fp>& M, const PairModule<Fp>& N) {
  const Field<Fp>& F = M.field();
  HomShape S(M.layout, N.layout);
  std::uint64_t total = enumeration_size(F, S.size(), 1u << 16);
  REQUIRE(total > 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec<Fp> phi(S.size());
    std::uint64_t r = idx;
    for (Index i = 0; i < S.size(); ++i, r /= F.p()) phi(i) = F.from_int(static_cast<int>(r % F.p()));
    bool ok = true;
    for (Index j = 0; j < M.dim_V() && ok; ++j) ok = N.V.contains(apply_map(*M.pair, S, phi, Vec<Fp>(M.V.basis.col(j))));
    count += ok;
  }
  return static_cast<Index>(std::llround(std::log(static_cast<double>(count)) / std::log(double(F.p()))));
}

// A random A-stable V with BV = W, or nothing after a few tries.
std::optional<PairModule<Fp>> random_module(PairPtr<Fp> P, std::vector<int> rank, Rng& rng, int ngens) {
  Layout L = layout_of(*P, rank);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Vec<Fp>> g;
    for (int i = 0; i < ngens; ++i) g.push_back(random_vec(P->field(), L.total(), rng));
    try {
      return make_module_a_span(P, rank, g);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

using Signature = std::tuple<std::vector<int>, Index, Index>;

std::vector<Signature> signatures(const std::vector<PairModule<Fp>>& parts) {
  std::vector<Signature> out;
  for (auto& M : parts) out.emplace_back(M.rank, M.dim_V(), end_algebra(M).dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("make_pair examples") {
  Field<Fp> F(2);
  auto P = reduced_pair(F);
  CHECK(P->A.dim == 1);
  CHECK(P->maxideal.dim() == 0);
  CHECK(P->s() == 2);
  CHECK(P->comp_max[0].dim() == 2);

  Algebra<Fp> E = product_algebra<Fp>(std::vector<Algebra<Fp>>(4, make_truncated_poly_algebra(F, 1)));
  auto Q = field_into(E);
  CHECK(Q->s() == 4);
  CHECK(Q->A.dim == 1);

  Algebra<Fp> kk = product_algebra<Fp>({make_truncated_poly_algebra(F, 1), make_truncated_poly_algebra(F, 1)});
  CHECK_THROWS_AS(make_pair(kk, {vec(F, {1, 0})}), Error);
  try {
    make_pair(kk, {vec(F, {1, 0})});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLocalA);
  }
}

TEST_CASE("make_module examples") {
  Field<Fp> F(2);
  auto P = reduced_pair(F);
  auto M = make_module(P, {1, 1}, {vec(F, {1, 0, 0, 1}), vec(F, {0, 1, 0, 0})});
  CHECK(M.dim_V() == 2);
  CHECK(M.dim_W() == 4);
  CHECK(M.a_gens.size() == 2);

  auto N = make_module(P, {1, 0}, {vec(F, {1, 0, 0})});
  CHECK(N.dim_V() == 1);

  try {
    make_module(P, {1, 1}, {vec(F, {0, 1, 0, 0})});
    FAIL("expected NotGenerating");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotGenerating);
  }

  auto T = make_pair(make_truncated_poly_algebra(F, 3), {vec(F, {0, 1, 0})});
  try {
    make_module(T, {1}, {vec(F, {1, 0, 0})});
    FAIL("expected NotAStable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAStable);
  }
  CHECK_THROWS_AS(make_module(P, {0, 0}, {}), Error);
  CHECK_THROWS_AS(make_module(P, {1, 1}, {vec(F, {1, 0, 0})}), Error);
}

TEST_CASE("direct sum adds rank and dim V") {
  Field<Fp> F(3);
  auto P = reduced_pair(F);
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    auto M = random_module(P, {1, static_cast<int>(draw(rng, 2))}, rng, 2);
    auto N = random_module(P, {static_cast<int>(draw(rng, 2)), 1}, rng, 2);
    if (!M || !N) continue;
    auto S = direct_sum(*M, *N);
    CHECK(S.rank[0] == M->rank[0] + N->rank[0]);
    CHECK(S.rank[1] == M->rank[1] + N->rank[1]);
    CHECK(S.dim_V() == M->dim_V() + N->dim_V());
  }
  auto other = reduced_pair(F);
  auto A = make_module(P, {1, 0}, {vec(F, {1, 0, 0})});
  auto B = make_module(other, {1, 0}, {vec(F, {1, 0, 0})});
  CHECK_THROWS_AS(direct_sum(A, B), Error);
}

TEST_CASE("Hom of V_T and V_U over F5[t]/(t^4)") {
  Field<Fp> F(5);
  auto P = field_into(make_truncated_poly_algebra(F, 4));
  for (int T = 0; T < 5; ++T)
    for (int U = 0; U < 5; ++U) {
      auto H = hom_space(v_t(P, T), v_t(P, U));
      CHECK(H.dim() == (T == U ? 1 : 0));
      CHECK(H.dim() == brute_hom_dim(v_t(P, T), v_t(P, U)));
    }
}

TEST_CASE("Hom solve agrees with enumeration on random modules") {
  Field<Fp> F(2);
  auto P = reduced_pair(F);
  Rng rng(11);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    auto M = random_module(P, {1, 1 + static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 3)));
    auto N = random_module(P, {1, 1 + static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 3)));
    if (!M || !N) continue;
    HomShape S(M->layout, N->layout);
    if (S.size() > 14) continue;
    auto H = hom_space(*M, *N);
    CHECK(H.dim() == brute_hom_dim(*M, *N));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("End contains the identity and is closed") {
  Field<Fp> F(3);
  auto P = reduced_pair(F);
  Rng rng(5);
  for (int it = 0; it < 15; ++it) {
    auto M = random_module(P, {1 + static_cast<int>(draw(rng, 2)), 1 + static_cast<int>(draw(rng, 2))}, rng, 2);
    if (!M) continue;
    auto H = hom_space(*M, *M);
    CHECK(H.space.contains(identity_map(*M)));
    Algebra<Fp> E = end_algebra(H);
    CHECK(check_unit(E));
    CHECK(check_associative(E));
  }
}

TEST_CASE("end_algebra examples") {
  Field<Fp> F(3);
  Algebra<Fp> D = make_monomial_quotient(F, {{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(D.dim == 3);
  auto P = field_into(D);
  for (int t = 0; t < 3; ++t) {
    auto M = make_module(P, {1}, {vec(F, {1, 0, 0}), vec(F, {0, 1, t})});
    CHECK(end_algebra(M).dim == 2);
  }
  auto Q = reduced_pair(F);
  auto free = make_module(Q, {1, 1}, {vec(F, {1, 0, 0, 0}), vec(F, {0, 1, 0, 0}), vec(F, {0, 0, 1, 0}), vec(F, {0, 0, 0, 1})});
  CHECK(end_algebra(free).dim == 4);
}

TEST_CASE("indecomposability and splitting") {
  Field<Fp> F(2);
  auto P = reduced_pair(F);
  auto A = make_module(P, {1, 0}, {vec(F, {1, 0, 0})});
  auto S = direct_sum(A, A);
  auto r = is_indecomposable(S);
  REQUIRE(r.decision == Decision::Decomp);
  auto [M1, M2] = split_by_idempotent(S, *r.idempotent);
  CHECK(M1.rank[0] + M2.rank[0] == 2);
  CHECK(M1.dim_V() + M2.dim_V() == 2);
  CHECK(is_isomorphic(M1, A).verdict == IsoVerdict::Iso);
  CHECK(is_isomorphic(M2, A).verdict == IsoVerdict::Iso);
  CHECK(is_indecomposable(A).decision == Decision::Indec);

  try {
    split_by_idempotent(S, identity_map(S));
    FAIL("expected TrivialIdempotent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TrivialIdempotent);
  }
  Vec<Fp> twice = identity_map(S);
  twice *= F.from_int(0);
  twice(0) = F.one();
  twice(1) = F.one();
  CHECK_THROWS_AS(split_by_idempotent(S, twice), Error);
}

TEST_CASE("split parts reassemble the original") {
  Field<Fp> F(3);
  auto P = reduced_pair(F);
  Rng rng(3);
  int done = 0;
  for (int it = 0; it < 30 && done < 8; ++it) {
    auto M = random_module(P, {1, 1}, rng, 1);
    auto N = random_module(P, {1, static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 2)));
    if (!M || !N) continue;
    auto S = direct_sum(*M, *N);
    auto r = is_indecomposable(S);
    REQUIRE(r.decision == Decision::Decomp);
    auto [X, Y] = split_by_idempotent(S, *r.idempotent);
    Budget exhaustive;
    exhaustive.enumeration = 1u << 22;
    CHECK(is_isomorphic(direct_sum(X, Y), S, exhaustive).verdict == IsoVerdict::Iso);
    ++done;
  }
  CHECK(done >= 4);
}

TEST_CASE("krull_schmidt") {
  Field<Fp> F(2);
  auto P = reduced_pair(F);
  Layout L = layout_of(*P, {2, 2});
  std::vector<Vec<Fp>> all;
  for (Index i = 0; i < L.total(); ++i) all.push_back(unit_vec(F, L.total(), i));
  auto free = make_module(P, {2, 2}, all);
  auto parts = krull_schmidt(free);
  CHECK(parts.size() == 4);
  std::vector<int> total(2, 0);
  for (auto& M : parts)
    for (int i = 0; i < 2; ++i) total[i] += M.rank[i];
  CHECK(total == std::vector<int>{2, 2});

  auto single = make_module(P, {1, 1}, {vec(F, {1, 0, 0, 1}), vec(F, {0, 1, 0, 0})});
  CHECK(krull_schmidt(single).size() == 1);
}

TEST_CASE("krull_schmidt signatures are stable under shuffles") {
  Field<Fp> F(2);
  auto P = reduced_pair(F);
  auto M1 = make_module(P, {1, 1}, {vec(F, {1, 0, 0, 1}), vec(F, {0, 1, 0, 0})});
  auto M2 = make_module(P, {1, 0}, {vec(F, {1, 0, 0})});
  auto M = direct_sum(M1, M2);
  auto want = signatures(krull_schmidt(M));
  CHECK(want.size() == 2);
  Rng rng(2024);
  for (int it = 0; it < 50; ++it) {
    auto N = transport(M, random_automorphism(M, rng));
    CHECK(signatures(krull_schmidt(N)) == want);
  }
}

TEST_CASE("isomorphism examples") {
  Field<Fp> F(5);
  auto P = field_into(make_truncated_poly_algebra(F, 4));
  CHECK(is_isomorphic(v_t(P, 2), v_t(P, 2)).verdict == IsoVerdict::Iso);
  for (int T = 0; T < 5; ++T)
    for (int U = T + 1; U < 5; ++U) {
      auto r = is_isomorphic(v_t(P, T), v_t(P, U));
      CHECK(r.verdict == IsoVerdict::NonIso);
      CHECK(r.certificate == "Hom(M,N) = 0");
    }
  Field<Fp> G(2);
  auto Q = reduced_pair(G);
  auto a = make_module(Q, {1, 1}, {vec(G, {1, 0, 0, 1}), vec(G, {0, 1, 0, 0})});
  auto b = make_module(Q, {1, 0}, {vec(G, {1, 0, 0})});
  CHECK(is_isomorphic(a, b).certificate == "rank");
}

TEST_CASE("transported modules are isomorphic and keep Hom dimensions") {
  Field<Fp> F(3);
  auto P = reduced_pair(F);
  Rng rng(99);
  int done = 0;
  for (int it = 0; it < 60 && done < 25; ++it) {
    auto M = random_module(P, {1, 1 + static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 2)));
    auto N = random_module(P, {1, 1 + static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 2)));
    if (!M || !N) continue;
    auto N2 = transport(*N, random_automorphism(*N, rng));
    CHECK(hom_space(*M, *N).dim() == hom_space(*M, N2).dim());
    CHECK(hom_space(N2, *M).dim() == hom_space(*N, *M).dim());
    auto r = is_isomorphic(*N, N2);
    CHECK(r.verdict == IsoVerdict::Iso);
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("quotient functor") {
  Field<Fp> F(2);
  Algebra<Fp> B = product_algebra<Fp>({make_truncated_poly_algebra(F, 6), make_truncated_poly_algebra(F, 2)});
  // A = k[(t^2, y)]
  auto P = make_pair(B, {vec(F, {0, 0, 1, 0, 0, 0, 0, 1})});
  CHECK(P->A.dim == 3);
  auto M = make_module_a_span(P, {1, 1}, {vec(F, {1, 0, 0, 0, 0, 0, 1, 0}), vec(F, {0, 1, 0, 0, 0, 0, 0, 0})});

  auto same = quotient_functor(M, zero_space(F, B.dim));
  CHECK(same.V.basis == M.V.basis);
  CHECK(same.rank == M.rank);

  Subspace<Fp> nB = product_space(P->B, P->maxideal, full_space(F, B.dim));
  auto Q = quotient_pair(P, nB);
  CHECK(Q.pair->B.dim == 3);
  CHECK(Q.pair->A.dim == 1);
  auto R = quotient_functor(M, Q);
  CHECK(R.rank == M.rank);

  CHECK_THROWS_AS(quotient_functor(M, full_space(F, B.dim)), Error);
  try {
    quotient_pair(P, span(F, Mat<Fp>(B.one)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == Errc::NotNilpotent || e.code() == Errc::NotAnIdeal));
  }
}

TEST_CASE("indecomposable quotients reflect to indecomposable modules") {
  Field<Fp> F(2);
  Algebra<Fp> B = product_algebra<Fp>({make_truncated_poly_algebra(F, 6), make_truncated_poly_algebra(F, 2)});
  auto P = make_pair(B, {vec(F, {0, 0, 1, 0, 0, 0, 0, 1})});
  Subspace<Fp> nB = product_space(P->B, P->maxideal, full_space(F, B.dim));
  auto Q = quotient_pair(P, nB);
  Rng rng(17);
  int reflected = 0;
  for (int it = 0; it < 60; ++it) {
    auto M = random_module(P, {1, 1 + static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 2)));
    if (!M) continue;
    if (is_indecomposable(quotient_functor(*M, Q)).decision != Decision::Indec) continue;
    CHECK(is_indecomposable(*M).decision == Decision::Indec);
    ++reflected;
  }
  CHECK(reflected > 5);
}

TEST_CASE("extend_scalars preserves rank, dim V and Hom dimensions") {
  Field<Fp> F(2);
  Algebra<Fp> C = product_algebra<Fp>({make_truncated_poly_algebra(F, 2), make_truncated_poly_algebra(F, 1)});
  Algebra<Fp> B = product_algebra<Fp>({make_truncated_poly_algebra(F, 4), make_truncated_poly_algebra(F, 1)});
  auto PC = make_pair(C, {C.one});
  auto PB = make_pair(B, {B.one});
  // t -> t^2
  Mat<Fp> incl = zeros(F, 5, 3);
  incl(0, 0) = F.one();
  incl(2, 1) = F.one();
  incl(4, 2) = F.one();

  auto id = make_module(PC, {1, 1}, {vec(F, {1, 0, 1}), vec(F, {0, 1, 0})});
  auto same = extend_scalars(id, PC, identity(F, 3));
  CHECK(same.V.basis == id.V.basis);

  Rng rng(8);
  std::vector<PairModule<Fp>> mods;
  for (int it = 0; it < 30 && mods.size() < 6; ++it)
    if (auto M = random_module(PC, {1, 1 + static_cast<int>(draw(rng, 2))}, rng, 1 + static_cast<int>(draw(rng, 2))))
      mods.push_back(*M);
  REQUIRE(mods.size() >= 4);
  for (auto& M : mods) {
    auto X = extend_scalars(M, PB, incl);
    CHECK(X.rank == M.rank);
    CHECK(X.dim_V() == M.dim_V());
    for (auto& N : mods) CHECK(hom_space(M, N).dim() == hom_space(X, extend_scalars(N, PB, incl)).dim());
  }

  Mat<Fp> cross = incl;
  cross(4, 2) = F.zero();
  cross(3, 2) = F.one();
  try {
    extend_scalars(id, PB, cross);
    FAIL("expected NotComponentwise");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotComponentwise);
  }
}

TEST_CASE("dr conditions and middle ring") {
  Field<Fp> F(2);
  Algebra<Fp> kk = product_algebra<Fp>({make_truncated_poly_algebra(F, 1), make_truncated_poly_algebra(F, 1)});
  auto P = field_into(kk);
  DrResult d = dr_conditions(*P);
  CHECK(d.d1 == 2);
  CHECK(d.d2 == 0);
  CHECK(d.dr1);
  CHECK(d.dr2);
  try {
    middle_ring(*P);
    FAIL("expected FiniteTypeConditionsHold");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FiniteTypeConditionsHold);
  }

  // k[t^3] inside k[t]/(t^12): d1 = 3, and t^4, t^5 span the d2 quotient
  Vec<Fp> t3 = zero_vec(F, 12);
  t3(3) = F.one();
  auto S = make_pair(make_truncated_poly_algebra(F, 12), {t3});
  d = dr_conditions(*S);
  CHECK(d.d1 == 3);
  CHECK(d.d2 == 2);
  auto C = middle_ring(*S);
  CHECK_FALSE(C.is_B);
  CHECK(C.C.dim == 10);
  CHECK(C.space.contains_all(S->A_incl));
  CHECK(check_associative(C.C));

  Algebra<Fp> D = product_algebra<Fp>({make_truncated_poly_algebra(F, 3), make_truncated_poly_algebra(F, 1),
                                       make_truncated_poly_algebra(F, 1)});
  auto R = field_into(D);
  d = dr_conditions(*R);
  CHECK(d.d1 == 5);
  CHECK(middle_ring(*R).is_B);
}
