// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <tuple>

#include "artin/constructions.hpp"
#include "artin/hyperex.hpp"
#include "corpus.hpp"

using namespace artin;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(s <= limit_s, "over the time limit");
  if (!c.ok) ++failures;
  std::printf("%s %2d  %-64s %7.2fs / %gs%s%s\n", c.ok ? "PASS" : "FAIL", id, title, s, limit_s,
              c.ok ? "" : "  -- ", c.why.str().c_str());
  std::fflush(stdout);
}

Algebra<Fp> point(const Field<Fp>& F) { return make_truncated_poly_algebra(F, 1); }

template <class K>
ConstructionSpec<K> spec_for(const PairPtr<K>& P, std::vector<int> rank, const K& t) {
  CaseResult<K> cls = classify_case(P->comps[0]);
  Vec<K> a = zero_vec(P->field(), P->B.dim), b = a;
  a.head(P->comp_dim(0)) = cls.witnesses.at(0);
  b.head(P->comp_dim(0)) = cls.witnesses.at(1);
  return ConstructionSpec<K>{P, std::move(rank), a, b, t, cls.label};
}

template <class K>
void check_family(Check& c, const FamilyReport<K>& R, std::size_t members, Index classes) {
  c.expect(R.params.size() == members, "parameter count");
  for (std::size_t i = 0; i < R.params.size(); ++i) {
    c.expect(R.verdicts[i] == "indec", "member " + std::to_string(i) + " is " + R.verdicts[i]);
    for (std::size_t j = 0; j < R.params.size(); ++j)
      if (i != j) c.expect(R.pairwise[i][j] == IsoVerdict::NonIso, "members " + std::to_string(i) + "," +
                                                                        std::to_string(j) + " not NonIso");
  }
  c.expect(R.classes == classes, "class count " + std::to_string(R.classes));
}

// GF(2) bitmask model of k[t]/t^19 x k[y]/y^7 for an independent d2.
using Mask = std::uint32_t;
Mask mt(int a) { return a < 19 ? Mask{1} << a : 0; }
Mask my(int b) { return b < 7 ? Mask{1} << (19 + b) : 0; }
Mask mmul(Mask x, Mask y) {
  Mask out = 0;
  for (int i = 0; i < 26; ++i)
    for (int j = 0; j < 26; ++j)
      if ((x >> i & 1) && (y >> j & 1)) {
        if (i < 19 && j < 19) out ^= mt(i + j);
        if (i >= 19 && j >= 19) out ^= my(i + j - 38);
      }
  return out;
}
int mask_rank(std::vector<Mask> v) {
  int r = 0;
  for (int bit = 25; bit >= 0; --bit) {
    auto it = std::find_if(v.begin(), v.end(), [&](Mask m) { return m >> bit & 1; });
    if (it == v.end()) continue;
    Mask p = *it;
    v.erase(it);
    for (Mask& m : v)
      if (m >> bit & 1) m ^= p;
    ++r;
  }
  return r;
}

using Signature = std::tuple<std::vector<int>, Index, Index>;
std::vector<Signature> signatures(const std::vector<PairModule<Fp>>& parts) {
  std::vector<Signature> out;
  for (const auto& M : parts) out.emplace_back(M.rank, M.dim_V(), end_algebra(M).dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  criterion(1, "rank (1,2), (1,3) indecomposables, also over the big pair", 5, [](Check& c) {
    Field<Fp> F(2);
    auto red = build_reduced_pair(F);
    auto big = build_big_pair(F);
    BranchModules<Fp> pm = branch_modules(red);
    QuotientPair<Fp> Q = quotient_pair(big, max_ideal_times_B(*big));
    for (const auto* M : {&pm.m12, &pm.m13}) {
      c.expect(is_indecomposable(*M).decision == Decision::Indec, "reduced module not Indec");
      PairModule<Fp> L = lift_to_big(*M, big);
      c.expect(quotient_functor(L, Q).V == M->V, "lift does not reduce back");
      c.expect(is_indecomposable(L).decision == Decision::Indec, "lifted module not Indec");
    }
  });

  criterion(2, "no indecomposables of rank (1,4), (1,5) over F2; paths agree", 120, [](Check& c) {
    Field<Fp> F(2);
    for (int n : {4, 5}) {
      SweepReport R = nonexistence_sweep(F, n, 1u << 20, 1000, 2024);
      c.expect(!R.truncated, "frontier truncated");
      c.expect(R.samples >= 1000, "too few samples");
      c.expect(R.indecomposable == 0, "found an indecomposable");
      c.expect(R.agree == R.instances(), "paths disagree");
      c.expect(R.all_decomposable(), "not all decomposable for n = " + std::to_string(n));
    }
  });

  criterion(3, "dim 3 special case over F3: 3 classes for (1), (2), (3), (2,1)", 20, [](Check& c) {
    Field<Fp> F(3);
    Algebra<Fp> D1 = make_monomial_quotient(F, {{2, 0}, {1, 1}, {0, 2}});
    Algebra<Fp> D = product_algebra<Fp>({D1, point(F)});
    for (auto r : std::vector<std::vector<int>>{{1}, {2}, {3}}) check_family(c, family(D1, r), 3, 3);
    FamilyReport<Fp> R = family(D, {2, 1});
    c.expect(R.label == CaseLabel::Dim3Special, "classified as " + std::string(case_name(R.label)));
    check_family(c, R, 3, 3);
  });

  criterion(4, "case 1 over F5[t]/(t^4): 5 classes, Hom = 0 between members", 10, [](Check& c) {
    Field<Fp> F(5);
    Algebra<Fp> D = make_truncated_poly_algebra(F, 4);
    for (int r : {1, 2}) {
      FamilyReport<Fp> R = family(D, {r});
      check_family(c, R, 5, 5);
      PairPtr<Fp> P = field_pair(D);
      std::vector<PairModule<Fp>> Ms;
      for (int t = 0; t < 5; ++t) {
        auto s = spec_for(P, {r}, F.from_int(t));
        Ms.push_back(construction_one(s));
        c.expect(locality_certificate(s, Ms.back()).certified, "uncertified member");
      }
      for (std::size_t i = 0; i < Ms.size(); ++i)
        for (std::size_t j = 0; j < Ms.size(); ++j)
          if (i != j) c.expect(hom_space(Ms[i], Ms[j]).dim() == 0, "nonzero Hom between members");
    }
  });

  criterion(5, "case 2b over F2[X,Y]/(X^2,Y^2), rank (2)", 10, [](Check& c) {
    Field<Fp> F(2);
    Algebra<Fp> D = make_monomial_quotient(F, {{2, 0}, {0, 2}});
    FamilyReport<Fp> R = family(D, {2});
    c.expect(R.label == CaseLabel::Case2b, "classified as " + std::string(case_name(R.label)));
    check_family(c, R, 2, 2);
    PairPtr<Fp> P = field_pair(D);
    for (int t : {0, 1}) {
      auto s = spec_for(P, {2}, F.from_int(t));
      c.expect(locality_certificate(s, construction_one(s)).certified, "uncertified member");
    }
  });

  criterion(6, "case 2c over F2(u,v) with k(sqrt u, sqrt v), ranks (1), (2)", 30, [](Check& c) {
    Field<Rf2> F;
    Algebra<Rf2> D = sqrt_uv_field();
    std::vector<Rf2> ts{Rf2(0), Rf2(1), Rf2::u(), Rf2::v()};
    PairPtr<Rf2> P = field_pair(D);
    for (int r : {1, 2}) {
      for (const Rf2& t : ts) {
        ConstructionSpec<Rf2> s{P, {r}, D.basis(1), D.basis(3), t, CaseLabel::Case2c};
        c.expect(locality_certificate(s, construction_one(s)).certified, "uncertified member");
      }
      FamilyReport<Rf2> R = family(D, {r}, ts);
      c.expect(R.label == CaseLabel::Case2c, "classified as " + std::string(case_name(R.label)));
      check_family(c, R, 4, 4);
    }
  });

  criterion(7, "case 2d over F2^4, ranks (1), (2,1): exhaustive idempotents", 60, [](Check& c) {
    Field<Fp> F(2);
    Algebra<Fp> k = point(F);
    Algebra<Fp> F24 = product_algebra<Fp>({k, k, k, k});
    for (auto [rest, rank] : std::vector<std::pair<std::vector<Algebra<Fp>>, std::vector<int>>>{
             {{}, {1}}, {{k}, {2, 1}}}) {
      ConstructionTwo C = construction_two(F24, rest, rank);
      Algebra<Fp> E = end_algebra(C.module);
      c.expect(E.dim <= 20, "End too large to enumerate");
      if (E.dim > 20) continue;
      c.expect(!exhaustive_idempotent(E).has_value(), "End has a nontrivial idempotent");
      c.expect(locality_certificate(C).certified, "alpha certificate failed");
    }
  });

  criterion(8, "Drozd-Roiter on the hypersurface pair: d1 = 4, d2 by brute force", 5, [](Check& c) {
    Field<Fp> F(2);
    auto P = build_big_pair(F);
    DrResult dr = dr_conditions(*P);
    c.expect(dr.d1 == 4 && !dr.dr1, "d1 = " + std::to_string(dr.d1));
    std::vector<Mask> A, n1, n2, nB, n2B;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 8; ++j)
        if (Mask m = mt(7 * i + 3 * j) | (i == 0 ? my(j) : 0)) A.push_back(m);
    for (Mask m : A)
      if (m != (mt(0) | my(0))) n1.push_back(m);
    for (Mask a : n1)
      for (Mask b : n1) n2.push_back(mmul(a, b));
    for (int e = 0; e < 26; ++e) {
      for (Mask a : n1) nB.push_back(mmul(a, Mask{1} << e));
      for (Mask a : n2) n2B.push_back(mmul(a, Mask{1} << e));
    }
    nB.insert(nB.end(), A.begin(), A.end());
    n2B.insert(n2B.end(), A.begin(), A.end());
    int d2 = mask_rank(nB) - mask_rank(n2B);
    c.expect(dr.d2 == d2, "d2 = " + std::to_string(dr.d2) + ", brute force " + std::to_string(d2));
  });

  criterion(9, "is_local matches idempotent enumeration on the corpus", 60, [](Check& c) {
    auto all = corpus::small_algebras();
    c.expect(all.size() >= 30, "corpus too small");
    Budget ladder;
    ladder.enumeration = 0;
    for (auto& [name, E] : all) {
      c.expect(enumeration_size(E.field, E.dim, std::uint64_t{1} << 16) > 0, name + " too large");
      bool local = !exhaustive_idempotent(E).has_value();
      c.expect((is_local(E, ladder).verdict == Verdict::Local) == local, name + ": ladder disagrees");
      Subspace<Fp> rad = radical(E);
      c.expect(is_two_sided_ideal(E, rad) && nilpotency_index(E, rad) >= 1, name + ": radical not a nilpotent ideal");
      if (rad.dim() > 0) c.expect(radical(quotient_by_ideal(E, rad).alg).dim() == 0, name + ": radical not a fixpoint");
    }
  });

  criterion(10, "Krull-Schmidt signatures of Q1 + Q2 + Q1 under 50 shuffles", 30, [](Check& c) {
    Field<Fp> F(2);
    BranchModules<Fp> pm = branch_modules(build_reduced_pair(F));
    PairModule<Fp> M = direct_sum(direct_sum(pm.m12, pm.m13), pm.m12);
    auto want = signatures({pm.m12, pm.m12, pm.m13});
    c.expect(signatures(krull_schmidt(M)) == want, "unexpected decomposition");
    Rng rng(10);
    for (int k = 0; k < 50; ++k)
      c.expect(signatures(krull_schmidt(transport(M, random_automorphism(M, rng)))) == want,
               "shuffle " + std::to_string(k) + " changed the signature");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
