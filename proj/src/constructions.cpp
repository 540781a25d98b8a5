#include "artin/constructions.hpp"

#include <type_traits>

namespace artin {

Algebra<Rf2> sqrt_uv_field() {
  Field<Rf2> F;
  auto rule = [&](Index i, Index j) {
    const int ea[4] = {0, 1, 1, 0}, eb[4] = {0, 0, 1, 1};
    int A = ea[i] + ea[j], B = eb[i] + eb[j];
    Rf2 c = 1;
    if (A == 2) {
      c = c * Rf2::u();
      A = 0;
    }
    if (B == 2) {
      c = c * Rf2::v();
      B = 0;
    }
    Vec<Rf2> out = zero_vec(F, 4);
    out(A == 0 ? (B == 0 ? 0 : 3) : (B == 0 ? 1 : 2)) = c;
    return out;
  };
  Algebra<Rf2> K = make_algebra(F, {"1", "a", "ab", "b"}, rule, unit_vec(F, 4, 0));
  K.components = {{0, 4}};
  return K;
}

template <class K>
PairPtr<K> field_pair(const Algebra<K>& D, std::string name) {
  return make_pair(D, {D.one}, std::move(name));
}

template <class K>
Mat<K> jordan_nilpotent(const Field<K>& F, Index r) {
  Mat<K> H = zeros(F, r, r);
  for (Index i = 0; i + 1 < r; ++i) H(i, i + 1) = F.one();
  return H;
}

template <class K>
Vec<K> truncated_diagonal(const ArtinianPair<K>& P, const Layout& L, const Vec<K>& x) {
  if (x.size() != L.rank[0])
    throw Error(Errc::LengthMismatch, "x has length " + std::to_string(x.size()) + ", r_1 = " +
                                          std::to_string(L.rank[0]));
  Vec<K> w = zero_vec(P.field(), L.total());
  for (Index i = 0; i < L.s(); ++i)
    for (Index c = 0; c < L.rank[i]; ++c) w.segment(L.block(i, c), L.cdim[i]) = x(c) * P.comps[i].one;
  return w;
}

namespace {

template <class K>
bool independent(const Algebra<K>& E, const std::vector<Vec<K>>& v) {
  return check_linear_independence(E, v);
}

template <class K>
Vec<K> embed_first(const ArtinianPair<K>& P, const Vec<K>& x) {
  Vec<K> out = zero_vec(P.field(), P.B.dim);
  out.segment(P.comp_offset(0), P.comp_dim(0)) = x;
  return out;
}

bool commutes(const Field<Fp>& F, const Mat<Fp>& X, const Mat<Fp>& H) { return mul(F, X, H) == mul(F, H, X); }
bool commutes(const Field<Rf2>& F, const Mat<Rf2>& X, const Mat<Rf2>& H) { return mul(F, X, H) == mul(F, H, X); }

template <class K>
Vec<K> flatten(const Mat<K>& X) {
  Vec<K> v(X.size());
  for (Index j = 0; j < X.cols(); ++j)
    for (Index i = 0; i < X.rows(); ++i) v(j * X.rows() + i) = X(i, j);
  return v;
}

template <class K>
Index span_dim(const Field<K>& F, const std::vector<Vec<K>>& vs, Index n) {
  return vs.empty() ? 0 : rank(F, columns(F, vs, n));
}

}  // namespace

template <class K>
void validate(const ConstructionSpec<K>& spec) {
  const ArtinianPair<K>& P = *spec.pair;
  if (static_cast<Index>(spec.rank.size()) != P.s())
    throw Error(Errc::RankMismatch, "rank length differs from the number of components");
  for (int r : spec.rank)
    if (r > spec.rank[0]) throw Error(Errc::HypothesisViolated, "needs r_1 >= r_i for every i");
  if (spec.a.size() != P.B.dim || spec.b.size() != P.B.dim)
    throw Error(Errc::LengthMismatch, "a and b must be elements of D");
  if (!is_zero_mat(Vec<K>(spec.a - embed_first(P, spec.a1()))) || !is_zero_mat(Vec<K>(spec.b - embed_first(P, spec.b1()))))
    throw Error(Errc::HypothesisViolated, "a and b must be supported in D_1");
  if (!independent(P.comps[0], {P.comps[0].one, spec.a1(), spec.b1()}))
    throw Error(Errc::HypothesisViolated, "{1, a1, b1} is dependent");
}

template <class K>
PairModule<K> construction_one(const ConstructionSpec<K>& spec) {
  validate(spec);
  const ArtinianPair<K>& P = *spec.pair;
  const Field<K>& F = P.field();
  Layout L = layout_of(P, spec.rank);
  const Index r1 = spec.rank[0], d1 = P.comp_dim(0);
  Vec<K> c = spec.a1() + spec.t * spec.b1();
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < r1; ++j) {
    gens.push_back(truncated_diagonal(P, L, unit_vec(F, r1, j)));
    Vec<K> g = zero_vec(F, L.total());
    g.segment(L.block(0, j), d1) = c;
    if (j > 0) g.segment(L.block(0, j - 1), d1) += spec.b1();  // H e_j = e_{j-1}
    gens.push_back(g);
  }
  return make_module(spec.pair, spec.rank, gens);
}

ConstructionTwo construction_two(const Algebra<Fp>& D1, const std::vector<Algebra<Fp>>& rest, std::vector<int> rank) {
  const Field<Fp>& F = D1.field;
  std::vector<Algebra<Fp>> factors;
  if (D1.components.size() > 1) {
    factors = component_algebras(D1);
  } else {
    for (const auto& f : split_into_local_factors(D1)) factors.push_back(corner_algebra(D1, f).alg);
  }
  const Index l = static_cast<Index>(factors.size());
  if (l < 4) throw Error(Errc::NeedAtLeastFourFactors, "D1 has " + std::to_string(l) + " local factors");
  for (const auto& f : factors)
    if (f.dim - radical(f).dim() != 1)
      throw Error(Errc::HypothesisViolated, "a factor of D1 has residue field bigger than k");
  if (rank.size() != rest.size() + 1) throw Error(Errc::RankMismatch, "rank length differs from 1 + #rest");
  for (int r : rank)
    if (r > rank[0]) throw Error(Errc::HypothesisViolated, "needs r_1 >= r_i for every i");
  if (rank[0] <= 0) throw Error(Errc::RankMismatch, "r_1 must be positive");

  std::vector<Algebra<Fp>> parts(l, make_truncated_poly_algebra(F, 1));
  for (const auto& D : rest) parts.push_back(D);
  ConstructionTwo out;
  out.pair = field_pair(product_algebra(parts));
  out.l = l;
  const ArtinianPair<Fp>& P = *out.pair;
  std::vector<int> r(l, rank[0]);
  for (std::size_t i = 1; i < rank.size(); ++i) r.push_back(rank[i]);
  Layout L = layout_of(P, r);
  const Index r1 = rank[0];
  std::vector<Vec<Fp>> gens;
  for (Index j = 0; j < r1; ++j) {
    Vec<Fp> x = zero_vec(F, L.total()), y = zero_vec(F, L.total());
    // (x, 0, x, x, x, ..., x, d_2(x), ..., d_s(x))
    for (Index c = 0; c < l; ++c)
      if (c != 1) x(L.block(c, j)) = F.one();
    for (Index i = l; i < L.s(); ++i)
      if (j < L.rank[i]) x.segment(L.block(i, j), L.cdim[i]) = P.comps[i].one;
    // (0, y, y, H y, 0, ..., 0)
    y(L.block(1, j)) = F.one();
    y(L.block(2, j)) = F.one();
    if (j > 0) y(L.block(3, j - 1)) = F.one();
    gens.push_back(x);
    gens.push_back(y);
  }
  out.module = make_module(out.pair, r, gens);
  return out;
}

template <class K>
void check_witnesses(const Algebra<K>& D1, const Vec<K>& a, const Vec<K>& b, CaseLabel c) {
  auto fail = [&](const std::string& why) { throw Error(Errc::CaseMismatch, std::string(case_name(c)) + ": " + why); };
  const Subspace<K> k1 = span(D1.field, Mat<K>(D1.one));
  auto zero = [](const Vec<K>& x) { return is_zero_mat(x); };
  switch (c) {
    case CaseLabel::Dim3Special:
    case CaseLabel::Case2a:
      if (!zero(D1.mul(a, a)) || !zero(D1.mul(a, b)) || !zero(D1.mul(b, b))) fail("needs a^2 = ab = b^2 = 0");
      if (!independent(D1, {D1.one, a, b})) fail("{1, a, b} is dependent");
      break;
    case CaseLabel::Case1:
      if (!independent(D1, {D1.one, a, D1.mul(a, a), b})) fail("{1, a, a^2, b} is dependent");
      break;
    case CaseLabel::Case2b:
      if (!zero(D1.mul(a, a)) || !zero(D1.mul(b, b))) fail("needs a^2 = b^2 = 0");
      if (!independent(D1, {D1.one, a, D1.mul(a, b), b})) fail("{1, a, ab, b} is dependent");
      break;
    case CaseLabel::Case2c:
      if (D1.field.characteristic() != 2) fail("needs characteristic 2");
      if (!k1.contains(D1.mul(a, a)) || !k1.contains(D1.mul(b, b))) fail("needs a^2, b^2 in k");
      if (!independent(D1, {D1.one, a, D1.mul(a, b), b})) fail("{1, a, ab, b} is dependent");
      break;
    default:
      fail("no parameter family");
  }
}

template <class K>
bool is_admissible(const Algebra<K>& D1, const Vec<K>& a, const Vec<K>& b, CaseLabel c, const K& t) {
  if (c != CaseLabel::Case1) return true;
  Vec<K> s = a + t * b;
  return independent(D1, {D1.one, a, b, D1.mul(s, s)});
}

template <class K>
bool distinguished(const Algebra<K>& D1, const Vec<K>& a, const Vec<K>& b, CaseLabel c, const K& t, const K& u) {
  if (t == u) return false;
  switch (c) {
    case CaseLabel::Case1:
      return is_admissible(D1, a, b, c, t) && is_admissible(D1, a, b, c, u) &&
             independent(D1, {D1.one, a, b, D1.mul(Vec<K>(a + t * b), Vec<K>(a + u * b))});
    case CaseLabel::Case2b:
      return !(u + t).is_zero();
    default:
      return true;
  }
}

template <class K>
std::vector<K> admissible_parameters(const Algebra<K>& D1, const Vec<K>& a, const Vec<K>& b, CaseLabel c,
                                     std::vector<K> params) {
  check_witnesses(D1, a, b, c);
  if (params.empty()) params = D1.field.default_params();
  std::vector<K> out;
  for (const K& t : params)
    if (is_admissible(D1, a, b, c, D1.field.typed(t))) out.push_back(D1.field.typed(t));
  return out;
}

template <class K>
SigmaTau<K> sigma_tau_extract(const ConstructionSpec<K>& spec, const PairModule<K>& M, const Vec<K>& phi) {
  const ArtinianPair<K>& P = *spec.pair;
  const Field<K>& F = P.field();
  const Algebra<K>& D1 = P.comps[0];
  const Index r1 = spec.rank[0];
  HomShape S(M.layout, M.layout);
  Mat<K> basis = columns(F, {D1.one, Vec<K>(spec.a1() + spec.t * spec.b1()), spec.b1()}, D1.dim);
  SigmaTau<K> st{zeros(F, r1, r1), zeros(F, r1, r1)};
  Mat<K> beta = zeros(F, r1, r1);
  for (Index to = 0; to < r1; ++to)
    for (Index from = 0; from < r1; ++from) {
      auto y = solve(F, basis, Vec<K>(phi.segment(S.at(0, to, from), D1.dim)));
      if (!y) throw Error(Errc::ExtractionFailed, "a D_1 entry leaves span{1, a + t b, b}");
      st.sigma(to, from) = (*y)(0);
      st.tau(to, from) = (*y)(1);
      beta(to, from) = (*y)(2);
    }
  if (beta != mul(F, jordan_nilpotent(F, r1), st.tau))
    throw Error(Errc::ExtractionFailed, "the b-part is not H tau");
  return st;
}

template <class K>
Certificate locality_certificate(const ConstructionSpec<K>& spec, const PairModule<K>& M) {
  const ArtinianPair<K>& P = *spec.pair;
  const Field<K>& F = P.field();
  const Index r1 = spec.rank[0];
  const Mat<K> H = jordan_nilpotent(F, r1);
  HomSpace<K> E = hom_space(M, M);
  Certificate cert;
  cert.end_dim = E.dim();
  std::vector<SigmaTau<K>> st;
  try {
    for (Index j = 0; j < E.dim(); ++j) st.push_back(sigma_tau_extract(spec, M, E.basis(j)));
  } catch (const Error& e) {
    cert.reason = e.what();
    return cert;
  }
  std::vector<Vec<K>> images, taus;
  for (const auto& x : st) {
    if (!commutes(F, x.sigma, H)) {
      cert.reason = "sigma does not commute with H";
      return cert;
    }
    if (!commutes(F, x.tau, H)) {
      cert.reason = "tau does not commute with H";
      return cert;
    }
    Vec<K> v(2 * r1 * r1);
    v << flatten(x.sigma), flatten(x.tau);
    images.push_back(v);
    taus.push_back(flatten(x.tau));
  }
  cert.tau_dim = span_dim(F, taus, r1 * r1);
  if (span_dim(F, images, 2 * r1 * r1) != E.dim()) {
    cert.reason = "phi -> (sigma, tau) is not injective";
    return cert;
  }
  // The D_1-block of a composite is the product of the D_1-blocks.
  const Algebra<K>& D1 = P.comps[0];
  HomShape S(M.layout, M.layout);
  auto block = [&](const Vec<K>& phi, Index to, Index from) { return Vec<K>(phi.segment(S.at(0, to, from), D1.dim)); };
  const Index n = std::min<Index>(E.dim(), 12);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Vec<K> phi = E.basis(x), psi = E.basis(y), prod = compose(P, S, phi, S, psi);
      for (Index to = 0; to < r1; ++to)
        for (Index from = 0; from < r1; ++from) {
          Vec<K> acc = zero_vec(F, D1.dim);
          for (Index m = 0; m < r1; ++m) acc += D1.mul(block(phi, to, m), block(psi, m, from));
          if (acc != block(prod, to, from)) {
            cert.reason = "restriction to D_1 is not multiplicative";
            return cert;
          }
        }
    }
  cert.certified = true;
  cert.reason = "End embeds in D_1[H], a local algebra";
  return cert;
}

Certificate locality_certificate(const ConstructionTwo& C) {
  const PairModule<Fp>& M = C.module;
  const Field<Fp>& F = M.field();
  const Index r1 = M.rank[0];
  const Mat<Fp> H = jordan_nilpotent(F, r1);
  HomSpace<Fp> E = hom_space(M, M);
  HomShape S(M.layout, M.layout);
  Certificate cert;
  cert.end_dim = E.dim();
  std::vector<Vec<Fp>> alphas;
  for (Index j = 0; j < E.dim(); ++j) {
    Vec<Fp> phi = E.basis(j);
    auto alpha_of = [&](Index c) {
      Mat<Fp> a = zeros(F, r1, r1);
      for (Index to = 0; to < r1; ++to)
        for (Index from = 0; from < r1; ++from) a(to, from) = phi(S.at(c, to, from));
      return a;
    };
    Mat<Fp> alpha = alpha_of(0);
    for (Index c = 1; c < C.l; ++c)
      if (alpha_of(c) != alpha) {
        cert.reason = "the blocks on the split factors differ";
        return cert;
      }
    if (!commutes(F, alpha, H)) {
      cert.reason = "alpha does not commute with H";
      return cert;
    }
    alphas.push_back(flatten(alpha));
  }
  if (span_dim(F, alphas, r1 * r1) != E.dim()) {
    cert.reason = "phi -> alpha is not injective";
    return cert;
  }
  cert.certified = true;
  cert.reason = "End embeds in k[H], a local algebra";
  return cert;
}

namespace {

template <class K>
struct Setup {
  CaseLabel label = CaseLabel::Undecided;
  PairPtr<K> pair;
  Vec<K> a1, b1;
  std::optional<ConstructionTwo> two;
};

template <class K>
Setup<K> prepare(const Algebra<K>& D, const std::vector<int>& rank, std::uint64_t seed) {
  std::vector<Algebra<K>> comps = component_algebras(D);
  if (rank.size() != comps.size()) throw Error(Errc::RankMismatch, "rank length differs from the number of components");
  bool nonzero = false;
  for (int r : rank) {
    if (r < 0) throw Error(Errc::RankMismatch, "negative rank entry");
    if (r > rank[0]) throw Error(Errc::HypothesisViolated, "needs r_1 >= r_i for every i");
    nonzero = nonzero || r > 0;
  }
  if (!nonzero) throw Error(Errc::RankMismatch, "rank tuple is zero");
  Algebra<K> D1 = comps[0];
  if (D1.dim < 3) throw Error(Errc::HypothesisViolated, "dim D_1 < 3");
  CaseResult<K> cr = classify_case(D1, seed);
  if (D1.dim == 3 && cr.label != CaseLabel::Dim3Special)
    throw Error(Errc::HypothesisViolated, "dim D_1 = 3 requires D_1 = k[X,Y]/(X^2,XY,Y^2)");
  if (cr.label == CaseLabel::Undecided)
    throw Error(Errc::CertificationFailed, "no case witnesses found for D_1: " + cr.note);
  Setup<K> s;
  s.label = cr.label;
  std::vector<Algebra<K>> rest(comps.begin() + 1, comps.end());
  if (cr.label == CaseLabel::Case2d) {
    if constexpr (std::is_same_v<K, Fp>) {
      s.two = construction_two(D1, rest, rank);
      s.pair = s.two->pair;
      return s;
    }
  }
  bool reduced = false;
  if constexpr (std::is_same_v<K, Rf2>) {
    if (cr.label == CaseLabel::Case2c) {
      Subspace<Rf2> N = nilradical_commutative(D1);
      if (N.dim() > 0) {
        D1 = quotient_by_ideal(D1, N).alg;
        D1.components = {{0, D1.dim}};
        cr = classify_case(D1, seed);
        if (cr.label != CaseLabel::Case2c) throw Error(Errc::CertificationFailed, "residue field lost case 2c");
        reduced = true;
      }
    }
  }
  s.a1 = cr.witnesses.at(0);
  s.b1 = cr.witnesses.at(1);
  std::vector<Algebra<K>> parts{D1};
  parts.insert(parts.end(), rest.begin(), rest.end());
  s.pair = field_pair(reduced || !D.has_components() ? product_algebra(parts) : D);
  return s;
}

template <class K>
ConstructionSpec<K> spec_for(const Setup<K>& s, const std::vector<int>& rank, const K& t) {
  return ConstructionSpec<K>{s.pair, rank, embed_first(*s.pair, s.a1), embed_first(*s.pair, s.b1), t, s.label};
}

// "indec" with the rung that certified it, "decomp", or "undecided".
template <class K>
std::pair<Decision, std::string> certify(const ConstructionSpec<K>& spec, const PairModule<K>& M, std::uint64_t seed) {
  Budget budget;
  budget.seed = seed;
  IndecResult<K> r = is_indecomposable(M, budget);
  if (r.decision != Decision::Undecided) return {r.decision, r.rung};
  Certificate c = locality_certificate(spec, M);
  return {c.certified ? Decision::Indec : Decision::Undecided, c.certified ? "sigma-tau" : c.reason};
}

std::pair<Decision, std::string> certify_two(const ConstructionTwo& C, std::uint64_t seed) {
  Budget budget;
  budget.seed = seed;
  IndecResult<Fp> r = is_indecomposable(C.module, budget);
  if (r.decision != Decision::Undecided) return {r.decision, r.rung};
  Certificate c = locality_certificate(C);
  return {c.certified ? Decision::Indec : Decision::Undecided, c.certified ? "alpha" : c.reason};
}

}  // namespace

template <class K>
Realization<K> realize_rank(const Algebra<K>& D, std::vector<int> rank, std::uint64_t seed) {
  Setup<K> s = prepare(D, rank, seed);
  if (s.two) {
    if constexpr (std::is_same_v<K, Fp>) {
      auto [d, how] = certify_two(*s.two, seed);
      if (d != Decision::Indec) throw Error(Errc::CertificationFailed, "construction two: " + how);
      return Realization<K>{s.pair, s.two->module, s.label, std::nullopt, how};
    }
  }
  const Field<K>& F = s.pair->field();
  const Algebra<K>& D1 = s.pair->comps[0];
  auto params = admissible_parameters(D1, s.a1, s.b1, s.label);
  if (params.empty()) throw Error(Errc::CertificationFailed, "no admissible parameter in the enumeration of k");
  auto spec = spec_for(s, rank, F.typed(params.front()));
  PairModule<K> M = construction_one(spec);
  auto [d, how] = certify(spec, M, seed);
  if (d != Decision::Indec) throw Error(Errc::CertificationFailed, std::string(decision_name(d)) + ": " + how);
  return Realization<K>{s.pair, M, s.label, spec.t, how};
}

template <class K>
FamilyReport<K> family(const Algebra<K>& D, std::vector<int> rank, std::vector<K> params, std::uint64_t seed) {
  Setup<K> s = prepare(D, rank, seed);
  FamilyReport<K> rep;
  rep.label = s.label;
  std::vector<PairModule<K>> mods;
  if (s.two) {
    if constexpr (std::is_same_v<K, Fp>) {
      mods.push_back(s.two->module);
      rep.verdicts.push_back(decision_name(certify_two(*s.two, seed).first));
      rep.distinguished = {{false}};
    }
  } else {
    const Field<K>& F = s.pair->field();
    const Algebra<K>& D1 = s.pair->comps[0];
    check_witnesses(D1, s.a1, s.b1, s.label);
    if (params.empty()) params = F.default_params();
    for (const K& t : params) {
      auto spec = spec_for(s, rank, F.typed(t));
      mods.push_back(construction_one(spec));
      rep.params.push_back(spec.t);
      rep.verdicts.push_back(decision_name(certify(spec, mods.back(), seed).first));
    }
    for (const K& t : rep.params) {
      rep.distinguished.emplace_back();
      for (const K& u : rep.params) rep.distinguished.back().push_back(distinguished(D1, s.a1, s.b1, s.label, t, u));
    }
  }
  const std::size_t n = mods.size();
  Budget budget;
  budget.seed = seed;
  rep.pairwise.assign(n, std::vector<IsoVerdict>(n, IsoVerdict::Iso));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rep.pairwise[i][j] = rep.pairwise[j][i] = is_isomorphic(mods[i], mods[j], budget).verdict;
  // certified classes: indecomposable members NonIso to every earlier representative
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.verdicts[i] != "indec") continue;
    bool fresh = true;
    for (std::size_t r : reps) fresh = fresh && rep.pairwise[i][r] == IsoVerdict::NonIso;
    if (fresh) reps.push_back(i);
  }
  rep.classes = static_cast<Index>(reps.size());
  return rep;
}

#define ARTIN_INSTANTIATE(K)                                                                                  \
  template PairPtr<K> field_pair(const Algebra<K>&, std::string);                                            \
  template Mat<K> jordan_nilpotent(const Field<K>&, Index);                                                  \
  template Vec<K> truncated_diagonal(const ArtinianPair<K>&, const Layout&, const Vec<K>&);                  \
  template void validate(const ConstructionSpec<K>&);                                                        \
  template PairModule<K> construction_one(const ConstructionSpec<K>&);                                       \
  template void check_witnesses(const Algebra<K>&, const Vec<K>&, const Vec<K>&, CaseLabel);                 \
  template bool is_admissible(const Algebra<K>&, const Vec<K>&, const Vec<K>&, CaseLabel, const K&);         \
  template bool distinguished(const Algebra<K>&, const Vec<K>&, const Vec<K>&, CaseLabel, const K&, const K&); \
  template std::vector<K> admissible_parameters(const Algebra<K>&, const Vec<K>&, const Vec<K>&, CaseLabel,   \
                                                std::vector<K>);                                             \
  template SigmaTau<K> sigma_tau_extract(const ConstructionSpec<K>&, const PairModule<K>&, const Vec<K>&);   \
  template Certificate locality_certificate(const ConstructionSpec<K>&, const PairModule<K>&);               \
  template Realization<K> realize_rank(const Algebra<K>&, std::vector<int>, std::uint64_t);                  \
  template FamilyReport<K> family(const Algebra<K>&, std::vector<int>, std::vector<K>, std::uint64_t);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
