#include "doctest.h"

#include "artin/constructions.hpp"

using namespace artin;

namespace {

Vec<Fp> vec(const Field<Fp>& F, std::vector<int> c) {
  Vec<Fp> v(static_cast<Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Index>(i)) = F.from_int(c[i]);
  return v;
}

Algebra<Fp> square_zero3(const Field<Fp>& F) { return make_monomial_quotient(F, {{2, 0}, {1, 1}, {0, 2}}); }

Algebra<Fp> with_k(const Algebra<Fp>& D1) { return product_algebra<Fp>({D1, make_truncated_poly_algebra(D1.field, 1)}); }

template <class K>
ConstructionSpec<K> spec_on(PairPtr<K> P, std::vector<int> rank, Vec<K> a1, Vec<K> b1, K t, CaseLabel c) {
  Vec<K> a = zero_vec(P->field(), P->B.dim), b = a;
  a.segment(0, a1.size()) = a1;
  b.segment(0, b1.size()) = b1;
  return ConstructionSpec<K>{P, std::move(rank), a, b, t, c};
}

}  // namespace

TEST_CASE("truncated diagonal and Jordan block") {
  Field<Fp> F(7);
  Algebra<Fp> D = product_algebra<Fp>({make_truncated_poly_algebra(F, 2), make_truncated_poly_algebra(F, 1)});
  auto P = field_pair(D);
  Layout L = layout_of(*P, {2, 1});
  CHECK(truncated_diagonal(*P, L, vec(F, {3, 5})) == vec(F, {3, 0, 5, 0, 3}));
  Layout L30 = layout_of(*P, {3, 0});
  CHECK(truncated_diagonal(*P, L30, vec(F, {1, 2, 3})) == vec(F, {1, 0, 2, 0, 3, 0}));
  CHECK_THROWS_AS(truncated_diagonal(*P, L, vec(F, {1})), Error);

  CHECK(jordan_nilpotent(F, 1) == zeros(F, 1, 1));
  Mat<Fp> H2 = jordan_nilpotent(F, 2);
  CHECK(H2(0, 1) == F.one());
  CHECK(H2(1, 0) == F.zero());
  Mat<Fp> H3 = jordan_nilpotent(F, 3);
  CHECK(is_zero_mat(mul(F, H3, mul(F, H3, H3))));
  CHECK_FALSE(is_zero_mat(mul(F, H3, H3)));
}

TEST_CASE("construction one examples") {
  Field<Fp> F(3);
  Algebra<Fp> D1 = square_zero3(F);
  auto P = field_pair(D1);
  for (int t = 0; t < 3; ++t) {
    auto M = construction_one(spec_on(P, {1}, D1.basis(1), D1.basis(2), F.from_int(t), CaseLabel::Dim3Special));
    CHECK(M.V == span(F, columns(F, {vec(F, {1, 0, 0}), vec(F, {0, 1, t})}, 3)));
  }

  Field<Fp> G(5);
  Algebra<Fp> T = make_truncated_poly_algebra(G, 4);
  auto Q = field_pair(T);
  auto M = construction_one(spec_on(Q, {2}, T.basis(1), T.basis(3), G.from_int(2), CaseLabel::Case1));
  CHECK(M.dim_V() == 4);
  // (a + 2b) d(e_2) + b d(e_1)
  CHECK(M.V.contains(vec(G, {0, 0, 0, 1, 0, 1, 0, 2})));

  auto R = field_pair(with_k(T));
  auto N = construction_one(spec_on(R, {1, 1}, T.basis(1), T.basis(3), G.from_int(1), CaseLabel::Case1));
  CHECK(N.V.contains(vec(G, {1, 0, 0, 0, 1})));
  CHECK(N.V.contains(vec(G, {0, 1, 0, 1, 0})));

  CHECK_THROWS_AS(construction_one(spec_on(R, {1, 2}, T.basis(1), T.basis(3), G.one(), CaseLabel::Case1)), Error);
  CHECK_THROWS_AS(construction_one(spec_on(Q, {1}, T.basis(1), T.basis(1), G.one(), CaseLabel::Case1)), Error);
}

TEST_CASE("construction one has dim V = 2 r_1 on random instances") {
  Field<Fp> F(3);
  Rng rng(4);
  std::vector<Algebra<Fp>> firsts{make_truncated_poly_algebra(F, 4), square_zero3(F),
                                  make_monomial_quotient(F, {{2, 0}, {0, 2}})};
  for (int it = 0; it < 40; ++it) {
    const Algebra<Fp>& D1 = firsts[draw(rng, firsts.size())];
    auto P = field_pair(with_k(D1));
    Vec<Fp> a = random_vec(F, D1.dim, rng), b = random_vec(F, D1.dim, rng);
    if (!check_linear_independence(D1, {D1.one, a, b})) continue;
    int r1 = 1 + static_cast<int>(draw(rng, 3)), r2 = static_cast<int>(draw(rng, r1 + 1));
    auto M = construction_one(spec_on(P, {r1, r2}, a, b, F.random(rng), CaseLabel::Case1));
    CHECK(M.dim_V() == 2 * r1);
    CHECK(b_span(*P, M.layout, {M.V.basis.col(0)}).dim() <= M.dim_W());
  }
}

TEST_CASE("construction two") {
  Field<Fp> F(2);
  Algebra<Fp> k = make_truncated_poly_algebra(F, 1);
  Algebra<Fp> F24 = product_algebra<Fp>({k, k, k, k});
  auto C = construction_two(F24, {}, {1});
  CHECK(C.l == 4);
  CHECK(C.module.dim_V() == 2);
  CHECK(C.module.V.contains(vec(F, {1, 0, 1, 1})));
  CHECK(C.module.V.contains(vec(F, {0, 1, 1, 0})));

  auto C2 = construction_two(F24, {k}, {2, 1});
  CHECK(C2.module.dim_V() == 4);
  CHECK(locality_certificate(C2).certified);
  CHECK(is_indecomposable(C2.module).decision == Decision::Indec);

  try {
    construction_two(product_algebra<Fp>({k, k, k}), {}, {1});
    FAIL("expected NeedAtLeastFourFactors");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NeedAtLeastFourFactors);
  }
  // an unsplit D1 is factored first
  Algebra<Fp> flat = F24;
  flat.components.clear();
  auto C3 = construction_two(flat, {}, {3});
  CHECK(C3.module.dim_V() == 6);
  CHECK(locality_certificate(C3).certified);
}

TEST_CASE("admissible parameters") {
  Field<Fp> F5(5);
  Algebra<Fp> T = make_truncated_poly_algebra(F5, 4);
  auto ad = admissible_parameters(T, T.basis(1), T.basis(3), CaseLabel::Case1);
  CHECK(ad.size() == 5);
  for (int t = 0; t < 5; ++t)
    for (int u = 0; u < 5; ++u)
      CHECK(distinguished(T, T.basis(1), T.basis(3), CaseLabel::Case1, F5.from_int(t), F5.from_int(u)) == (t != u));

  Field<Fp> F3(3);
  Algebra<Fp> S = square_zero3(F3);
  CHECK(admissible_parameters(S, S.basis(1), S.basis(2), CaseLabel::Dim3Special).size() == 3);
  CHECK(distinguished(S, S.basis(1), S.basis(2), CaseLabel::Dim3Special, F3.from_int(1), F3.from_int(2)));

  Field<Fp> F2(2);
  Algebra<Fp> Q = make_monomial_quotient(F2, {{2, 0}, {0, 2}});
  Vec<Fp> X = Q.basis(1), Y = Q.basis(2);
  CHECK(admissible_parameters(Q, X, Y, CaseLabel::Case2b).size() == 2);
  CHECK(distinguished(Q, X, Y, CaseLabel::Case2b, F2.zero(), F2.one()));
  CHECK_FALSE(distinguished(Q, X, Y, CaseLabel::Case2b, F2.one(), F2.one()));
  Algebra<Fp> Q3 = make_monomial_quotient(F3, {{2, 0}, {0, 2}});
  CHECK_FALSE(distinguished(Q3, Q3.basis(1), Q3.basis(2), CaseLabel::Case2b, F3.from_int(1), F3.from_int(2)));

  try {
    admissible_parameters(T, T.basis(1), T.basis(3), CaseLabel::Case2b);
    FAIL("expected CaseMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CaseMismatch);
  }
}

TEST_CASE("sigma and tau") {
  Field<Fp> F(3);
  Algebra<Fp> D1 = square_zero3(F);
  auto P = field_pair(D1);
  auto spec = spec_on(P, {1}, D1.basis(1), D1.basis(2), F.from_int(2), CaseLabel::Dim3Special);
  auto M = construction_one(spec);
  auto id = sigma_tau_extract(spec, M, identity_map(M));
  CHECK(id.sigma == identity(F, 1));
  CHECK(is_zero_mat(id.tau));
  // phi = X + 2Y
  auto st = sigma_tau_extract(spec, M, vec(F, {0, 1, 2}));
  CHECK(is_zero_mat(st.sigma));
  CHECK(st.tau(0, 0) == F.one());
  auto z = sigma_tau_extract(spec, M, vec(F, {0, 0, 0}));
  CHECK(is_zero_mat(z.sigma));
  CHECK(is_zero_mat(z.tau));
  try {
    sigma_tau_extract(spec, M, vec(F, {0, 0, 1}));  // b-part 1 but H tau = 0
    FAIL("expected ExtractionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExtractionFailed);
  }
}

TEST_CASE("sigma-tau extraction is linear and multiplicative where tau vanishes") {
  Field<Fp> F(5);
  Algebra<Fp> T = make_truncated_poly_algebra(F, 4);
  auto P = field_pair(with_k(T));
  for (std::vector<int> rank : {std::vector<int>{2, 1}, std::vector<int>{3, 2}, std::vector<int>{3, 3}}) {
    auto spec = spec_on(P, rank, T.basis(1), T.basis(3), F.from_int(1), CaseLabel::Case1);
    auto M = construction_one(spec);
    auto H = hom_space(M, M);
    HomShape S(M.layout, M.layout);
    for (Index i = 0; i < H.dim(); ++i) {
      auto x = sigma_tau_extract(spec, M, H.basis(i));
      CHECK(is_zero_mat(x.tau));
      for (Index j = 0; j < H.dim(); ++j) {
        auto y = sigma_tau_extract(spec, M, H.basis(j));
        auto s = sigma_tau_extract(spec, M, Vec<Fp>(H.basis(i) + F.from_int(3) * H.basis(j)));
        CHECK(s.sigma == Mat<Fp>(x.sigma + F.from_int(3) * y.sigma));
        auto p = sigma_tau_extract(spec, M, compose(*P, S, H.basis(i), S, H.basis(j)));
        CHECK(p.sigma == mul(F, x.sigma, y.sigma));
      }
    }
  }
}

TEST_CASE("locality certificate") {
  Field<Fp> F3(3);
  Algebra<Fp> D1 = square_zero3(F3);
  auto P = field_pair(D1);
  auto spec = spec_on(P, {1}, D1.basis(1), D1.basis(2), F3.from_int(1), CaseLabel::Dim3Special);
  auto c = locality_certificate(spec, construction_one(spec));
  CHECK(c.certified);
  CHECK(c.end_dim == 2);
  CHECK(c.tau_dim == 1);

  Field<Fp> F5(5);
  Algebra<Fp> T = make_truncated_poly_algebra(F5, 4);
  auto Q = field_pair(with_k(T));
  for (int t = 0; t < 5; ++t) {
    auto s = spec_on(Q, {2, 1}, T.basis(1), T.basis(3), F5.from_int(t), CaseLabel::Case1);
    auto M = construction_one(s);
    auto cert = locality_certificate(s, M);
    CHECK(cert.certified);
    CHECK(cert.tau_dim == 0);
    CHECK(is_indecomposable(M).decision == Decision::Indec);
  }
}

TEST_CASE("locality certificate over F2(u,v) for k(sqrt u, sqrt v)") {
  Field<Rf2> F;
  Algebra<Rf2> K = sqrt_uv_field();
  auto P = field_pair(K);
  for (const Rf2& t : {Rf2(0), Rf2(1), Rf2::u(), Rf2::v()}) {
    auto one = spec_on<Rf2>(P, {1}, K.basis(1), K.basis(3), t, CaseLabel::Case2c);
    auto M1 = construction_one(one);
    auto c1 = locality_certificate(one, M1);
    CHECK(c1.certified);
    // rank (1): (a + t b)^2 lies in k, so End = V_t = span{1, a + t b}, a field
    CHECK(c1.end_dim == 2);
    CHECK(c1.tau_dim == 1);
    auto two = spec_on<Rf2>(P, {2}, K.basis(1), K.basis(3), t, CaseLabel::Case2c);
    auto c2 = locality_certificate(two, construction_one(two));
    CHECK(c2.certified);
  }
}

TEST_CASE("realize_rank") {
  Field<Fp> F3(3);
  auto r = realize_rank(with_k(square_zero3(F3)), {2, 1});
  CHECK(r.module.dim_V() == 4);
  CHECK(r.module.rank == std::vector<int>{2, 1});
  CHECK(r.label == CaseLabel::Dim3Special);

  Field<Fp> F5(5);
  auto q = realize_rank(make_truncated_poly_algebra(F5, 4), {3});
  CHECK(q.module.rank == std::vector<int>{3});
  CHECK(q.label == CaseLabel::Case1);
  CHECK(is_indecomposable(q.module).decision == Decision::Indec);

  try {
    realize_rank(with_k(make_truncated_poly_algebra(F5, 4)), {1, 2});
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisViolated);
  }

  Field<Fp> F2(2);
  Algebra<Fp> k = make_truncated_poly_algebra(F2, 1);
  Algebra<Fp> F24 = product_algebra<Fp>({k, k, k, k});
  F24.components.clear();
  auto d = realize_rank(product_algebra<Fp>({F24, make_truncated_poly_algebra(F2, 2)}), {2, 1});
  CHECK(d.label == CaseLabel::Case2d);
  CHECK(d.module.rank == std::vector<int>{2, 2, 2, 2, 1});

  auto c = realize_rank(sqrt_uv_field(), {2});
  CHECK(c.label == CaseLabel::Case2c);
  CHECK(c.module.dim_V() == 4);
}

TEST_CASE("families") {
  Field<Fp> F5(5);
  auto f = family(make_truncated_poly_algebra(F5, 4), {1});
  CHECK(f.classes == 5);
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    CHECK(f.pairwise[i][i] == IsoVerdict::Iso);
    for (std::size_t j = 0; j < f.params.size(); ++j) {
      CHECK(f.pairwise[i][j] == f.pairwise[j][i]);
      if (f.distinguished[i][j]) CHECK(f.pairwise[i][j] == IsoVerdict::NonIso);
    }
  }

  Field<Fp> F3(3);
  CHECK(family(square_zero3(F3), {2}).classes == 3);

  Field<Fp> F2(2);
  auto g = family(make_monomial_quotient(F2, {{2, 0}, {0, 2}}), {1});
  CHECK(g.label == CaseLabel::Case2b);
  REQUIRE(g.params.size() == 2);
  CHECK(g.verdicts == std::vector<std::string>{"indec", "indec"});
  CHECK(g.distinguished[0][1]);
  CHECK(g.classes == 2);
}
