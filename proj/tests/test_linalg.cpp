#include "doctest.h"

#include "artin/linalg.hpp"

using namespace artin;

namespace {

template <class K>
Mat<K> random_mat(const Field<K>& F, Index r, Index c, Rng& rng, int sparsity = 2) {
  Mat<K> A = zeros(F, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      if (draw(rng, sparsity) == 0) A(i, j) = F.random(rng);
  return A;
}

}  // namespace

TEST_CASE("raw kernel matches the generic elimination") {
  for (std::uint32_t p : {2u, 3u, 7u, 65521u}) {
    Field<Fp> F(p);
    Rng rng(p);
    for (int trial = 0; trial < 40; ++trial) {
      Index r = 1 + draw(rng, 12), c = 1 + draw(rng, 90);
      Mat<Fp> A = random_mat(F, r, c, rng);
      Rref<Fp> fast = rref(F, A);
      Rref<Fp> slow = rref<Fp>(F, A);
      CHECK(fast.pivots == slow.pivots);
      CHECK(fast.R == slow.R);
    }
  }
}

template <class K>
void nullspace_props(const Field<K>& F, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 30; ++trial) {
    Index r = 1 + draw(rng, 6), c = 1 + draw(rng, 8);
    Mat<K> A = random_mat(F, r, c, rng);
    Mat<K> N = nullspace(F, A);
    CHECK(rank(F, A) + N.cols() == c);
    CHECK(is_zero_mat(mul(F, A, N)));
    if (N.cols()) CHECK(rank(F, N) == N.cols());
    Vec<K> x = random_vec(F, c, rng);
    Vec<K> b = mul(F, A, Mat<K>(x));
    auto s = solve(F, A, b);
    REQUIRE(s);
    CHECK(mul(F, A, Mat<K>(*s)) == Mat<K>(b));
  }
}

TEST_CASE("nullspace and solve") {
  nullspace_props(Field<Fp>(2), 1);
  nullspace_props(Field<Fp>(5), 2);
  nullspace_props(Field<Rf2>(), 3);
}

TEST_CASE("subspace membership, coordinates and annihilator") {
  Field<Fp> F(3);
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Mat<Fp> G = random_mat(F, 10, 1 + draw(rng, 6), rng);
    Subspace<Fp> S = span(F, G);
    CHECK(S.dim() == rank(F, G));
    CHECK(S.contains_all(G));
    Mat<Fp> C = annihilator(F, S);
    CHECK(C.rows() == 10 - S.dim());
    for (Index j = 0; j < G.cols(); ++j) {
      CHECK(is_zero_mat(mul(F, C, Mat<Fp>(G.col(j)))));
      Vec<Fp> co = S.coords(G.col(j));
      CHECK(mul(F, S.basis, Mat<Fp>(co)) == Mat<Fp>(G.col(j)));
    }
    Vec<Fp> v = random_vec(F, 10, rng);
    bool inside = S.contains(v);
    CHECK(inside == is_zero_mat(mul(F, C, Mat<Fp>(v))));
    CHECK(inside == (rank(F, Mat<Fp>((Mat<Fp>(10, G.cols() + 1) << G, v).finished())) == S.dim()));
  }
}

TEST_CASE("sum and intersection dimensions") {
  Field<Fp> F(2);
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Subspace<Fp> a = span(F, random_mat(F, 8, 1 + draw(rng, 5), rng));
    Subspace<Fp> b = span(F, random_mat(F, 8, 1 + draw(rng, 5), rng));
    Subspace<Fp> s = sum(F, a, b), i = intersect(F, a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains_all(i.basis));
    CHECK(b.contains_all(i.basis));
  }
}
