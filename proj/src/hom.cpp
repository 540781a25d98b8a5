#include "artin/hom.hpp"

#include <algorithm>

#include "artin/upoly.hpp"

namespace artin {

HomShape::HomShape(Layout s, Layout t) : src(std::move(s)), tgt(std::move(t)) {
  off.push_back(0);
  for (Index i = 0; i < src.s(); ++i) off.push_back(off.back() + tgt.rank[i] * src.rank[i] * src.cdim[i]);
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Indec: return "indec";
    case Decision::Decomp: return "decomp";
    default: return "undecided";
  }
}

const char* iso_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Iso: return "iso";
    case IsoVerdict::NonIso: return "noniso";
    default: return "undecided";
  }
}

template <class K>
Vec<K> HomSpace<K>::combine(const Vec<K>& c) const {
  return mul(source.field(), space.basis, Mat<K>(c));
}

template <class K>
HomSpace<K> hom_space(const PairModule<K>& M, const PairModule<K>& N) {
  if (M.pair != N.pair) throw Error(Errc::PairMismatch, "Hom between modules over different pairs");
  const ArtinianPair<K>& P = *M.pair;
  const Field<K>& F = P.field();
  HomShape S(M.layout, N.layout);
  Mat<K> C2 = annihilator(F, N.V);
  std::vector<Mat<K>> rows;
  if (C2.rows() > 0) {
    for (const auto& g : M.a_gens) {
      Mat<K> G = zeros(F, N.dim_W(), S.size());
      for (Index i = 0; i < S.src.s(); ++i) {
        const Index d = S.src.cdim[i];
        for (Index from = 0; from < S.src.rank[i]; ++from) {
          Vec<K> gb = g.segment(S.src.block(i, from), d);
          if (is_zero_mat(gb)) continue;
          Mat<K> R = P.comps[i].right_mult(gb);
          for (Index to = 0; to < S.tgt.rank[i]; ++to)
            G.block(S.tgt.block(i, to), S.at(i, to, from), d, d) = R;
        }
      }
      rows.push_back(mul(F, C2, G));
    }
  }
  Subspace<K> space = rows.empty() ? full_space(F, S.size()) : span(F, nullspace(F, vstack(rows, S.size())));
  return HomSpace<K>{M, N, S, space};
}

template <class K>
Vec<K> apply_map(const ArtinianPair<K>& P, const HomShape& S, const Vec<K>& phi, const Vec<K>& w) {
  Vec<K> out = zero_vec(P.field(), S.tgt.total());
  for (Index i = 0; i < S.src.s(); ++i) {
    const Index d = S.src.cdim[i];
    for (Index from = 0; from < S.src.rank[i]; ++from) {
      Vec<K> wb = w.segment(S.src.block(i, from), d);
      if (is_zero_mat(wb)) continue;
      for (Index to = 0; to < S.tgt.rank[i]; ++to)
        out.segment(S.tgt.block(i, to), d) += P.comps[i].mul(Vec<K>(phi.segment(S.at(i, to, from), d)), wb);
    }
  }
  return out;
}

template <class K>
Mat<K> map_matrix(const ArtinianPair<K>& P, const HomShape& S, const Vec<K>& phi) {
  Mat<K> out = zeros(P.field(), S.tgt.total(), S.src.total());
  for (Index i = 0; i < S.src.s(); ++i) {
    const Index d = S.src.cdim[i];
    for (Index to = 0; to < S.tgt.rank[i]; ++to)
      for (Index from = 0; from < S.src.rank[i]; ++from)
        out.block(S.tgt.block(i, to), S.src.block(i, from), d, d) =
            P.comps[i].left_mult(Vec<K>(phi.segment(S.at(i, to, from), d)));
  }
  return out;
}

template <class K>
Vec<K> compose(const ArtinianPair<K>& P, const HomShape& outer, const Vec<K>& psi, const HomShape& inner,
               const Vec<K>& phi) {
  HomShape S(inner.src, outer.tgt);
  Vec<K> out = zero_vec(P.field(), S.size());
  for (Index i = 0; i < S.src.s(); ++i) {
    const Index d = S.src.cdim[i];
    for (Index mid = 0; mid < inner.tgt.rank[i]; ++mid)
      for (Index from = 0; from < S.src.rank[i]; ++from) {
        Vec<K> f = phi.segment(inner.at(i, mid, from), d);
        if (is_zero_mat(f)) continue;
        for (Index to = 0; to < S.tgt.rank[i]; ++to) {
          Vec<K> g = psi.segment(outer.at(i, to, mid), d);
          if (is_zero_mat(g)) continue;
          out.segment(S.at(i, to, from), d) += P.comps[i].mul(g, f);
        }
      }
  }
  return out;
}

template <class K>
Vec<K> identity_map(const PairModule<K>& M) {
  HomShape S(M.layout, M.layout);
  Vec<K> out = zero_vec(M.field(), S.size());
  for (Index i = 0; i < S.src.s(); ++i)
    for (Index c = 0; c < S.src.rank[i]; ++c) out.segment(S.at(i, c, c), S.src.cdim[i]) = M.pair->comps[i].one;
  return out;
}

template <class K>
Algebra<K> end_algebra(const HomSpace<K>& H) {
  const ArtinianPair<K>& P = *H.source.pair;
  std::vector<Vec<K>> basis;
  std::vector<std::string> labels;
  for (Index j = 0; j < H.dim(); ++j) {
    basis.push_back(H.basis(j));
    labels.push_back("f" + std::to_string(j));
  }
  auto rule = [&](Index a, Index b) { return H.coords(compose(P, H.shape, basis[a], H.shape, basis[b])); };
  return make_algebra(P.field(), labels, rule, H.coords(identity_map(H.source)));
}

template <class K>
Algebra<K> end_algebra(const PairModule<K>& M) {
  return end_algebra(hom_space(M, M));
}

namespace {

// Splits off a summand from the minimal polynomial of one endomorphism,
// working on flattened maps so End never needs structure constants.
template <class K>
std::optional<Vec<K>> split_from_map(const HomSpace<K>& H, const Vec<K>& phi) {
  const ArtinianPair<K>& P = *H.source.pair;
  const Field<K>& F = P.field();
  const HomShape& S = H.shape;
  std::vector<Vec<K>> pw{identity_map(H.source)};
  UPoly<K> f;
  for (;;) {
    Vec<K> next = compose(P, S, phi, S, pw.back());
    Mat<K> cols(S.size(), static_cast<Index>(pw.size()));
    for (std::size_t j = 0; j < pw.size(); ++j) cols.col(static_cast<Index>(j)) = pw[j];
    if (auto c = solve(F, cols, next)) {
      std::vector<K> cf(pw.size() + 1, F.zero());
      for (std::size_t j = 0; j < pw.size(); ++j) cf[j] = -(*c)(static_cast<Index>(j));
      cf.back() = F.one();
      f = UPoly<K>(std::move(cf));
      break;
    }
    pw.push_back(std::move(next));
  }
  if (f.degree() <= 1) return std::nullopt;
  auto fs = factor_univariate(F, f);
  if (fs.size() < 2) return std::nullopt;
  UPoly<K> g = constant_poly(F.one());
  for (int k = 0; k < fs[0].mult; ++k) g = g * fs[0].f;
  auto [d, s, t] = xgcd(g, divmod(f, g).first);
  if (d.degree() != 0) return std::nullopt;
  UPoly<K> q = s * g;
  Vec<K> e = zero_vec(F, S.size());
  for (int i = q.degree(); i >= 0; --i) {
    e = compose(P, S, phi, S, e);
    if (!q.coeff(i).is_zero()) e += q.coeff(i) * pw[0];
  }
  Vec<K> ee = compose(P, S, e, S, e);
  if (ee != e || is_zero_mat(e) || e == pw[0]) return std::nullopt;
  return e;
}

}  // namespace

template <class K>
IndecResult<K> is_indecomposable(const PairModule<K>& M, const Budget& budget) {
  HomSpace<K> H = hom_space(M, M);
  if constexpr (std::is_same_v<K, Fp>) {
    // A cheap first pass that only ever certifies decomposability.
    Rng rng(budget.seed ^ 0x5eedULL);
    std::uint64_t tries = std::min<std::uint64_t>(budget.trials, 12);
    for (std::uint64_t k = 0; k < tries && H.dim() > 1; ++k) {
      Vec<K> phi = H.combine(random_vec(M.field(), H.dim(), rng));
      if (auto e = split_from_map(H, phi)) {
        IndecResult<K> out;
        out.decision = Decision::Decomp;
        out.idempotent = std::move(*e);
        out.rung = "split";
        out.end_dim = H.dim();
        return out;
      }
    }
  }
  Algebra<K> E = end_algebra(H);
  LocalResult<K> r = is_local(E, budget);
  IndecResult<K> out;
  out.rung = r.rung;
  out.end_dim = E.dim;
  if (r.verdict == Verdict::Local) {
    out.decision = Decision::Indec;
  } else if (r.verdict == Verdict::NotLocal) {
    out.decision = Decision::Decomp;
    out.idempotent = H.combine(*r.idempotent);
  }
  return out;
}

namespace {

// Images of the copy generators under f, restricted to component i, as W-vectors.
template <class K>
Vec<K> copy_image(const ArtinianPair<K>& P, const HomShape& S, const Vec<K>& f, Index i, Index c) {
  Vec<K> u = zero_vec(P.field(), S.tgt.total());
  for (Index to = 0; to < S.tgt.rank[i]; ++to)
    u.segment(S.tgt.block(i, to), S.src.cdim[i]) = f.segment(S.at(i, to, c), S.src.cdim[i]);
  return u;
}

template <class K>
Vec<K> embed_comp(const ArtinianPair<K>& P, Index i, const Vec<K>& x) {
  Vec<K> b = zero_vec(P.field(), P.B.dim);
  b.segment(P.comp_offset(i), P.comp_dim(i)) = x;
  return b;
}

// A free basis of f(W) chosen among the copy images (minimal generators by
// Nakayama); returns the inclusion of the new W into W and the rank tuple.
template <class K>
std::pair<Mat<K>, std::vector<int>> free_image(const PairModule<K>& M, const Vec<K>& f) {
  const ArtinianPair<K>& P = *M.pair;
  const Field<K>& F = P.field();
  HomShape S(M.layout, M.layout);
  std::vector<int> rank(M.rank.size(), 0);
  std::vector<Vec<K>> cols;
  for (Index i = 0; i < S.src.s(); ++i) {
    std::vector<Vec<K>> u, mu;
    for (Index c = 0; c < S.src.rank[i]; ++c) {
      u.push_back(copy_image(P, S, f, i, c));
      for (Index n = 0; n < P.comp_max[i].dim(); ++n)
        mu.push_back(act(P, M.layout, embed_comp(P, i, Vec<K>(P.comp_max[i].basis.col(n))), u.back()));
    }
    Subspace<K> cur = mu.empty() ? zero_space(F, M.dim_W()) : span(F, columns(F, mu, M.dim_W()));
    for (Index c = 0; c < S.src.rank[i]; ++c) {
      if (cur.contains(u[c])) continue;
      ++rank[i];
      std::vector<Vec<K>> bu;
      for (Index m = 0; m < P.comp_dim(i); ++m) {
        bu.push_back(act(P, M.layout, embed_comp(P, i, P.comps[i].basis(m)), u[c]));
        cols.push_back(bu.back());
      }
      cur = sum(F, cur, span(F, columns(F, bu, M.dim_W())));
    }
  }
  return {columns(F, cols, M.dim_W()), rank};
}

template <class K>
PairModule<K> image_module(const PairModule<K>& M, const Vec<K>& f, const Mat<K>& incl, std::vector<int> rank) {
  const Field<K>& F = M.field();
  HomShape S(M.layout, M.layout);
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < M.dim_V(); ++j) {
    auto y = solve(F, incl, apply_map(*M.pair, S, f, Vec<K>(M.V.basis.col(j))));
    if (!y) throw Error(Errc::InvariantViolation, "image of V leaves the chosen free summand");
    gens.push_back(*y);
  }
  return make_module(M.pair, std::move(rank), gens);
}

}  // namespace

template <class K>
std::pair<PairModule<K>, PairModule<K>> split_by_idempotent(const PairModule<K>& M, const Vec<K>& e) {
  const ArtinianPair<K>& P = *M.pair;
  const Field<K>& F = P.field();
  HomShape S(M.layout, M.layout);
  if (e.size() != S.size()) throw Error(Errc::LengthMismatch, "endomorphism has the wrong length");
  if (compose(P, S, e, S, e) != e) throw Error(Errc::NotIdempotent, "e o e != e");
  Vec<K> id = identity_map(M);
  if (is_zero_mat(e) || e == id) throw Error(Errc::TrivialIdempotent, "e is 0 or 1");
  for (Index j = 0; j < M.dim_V(); ++j)
    if (!M.V.contains(apply_map(P, S, e, Vec<K>(M.V.basis.col(j)))))
      throw Error(Errc::NotIdempotent, "e does not preserve V");
  Vec<K> f = id - e;
  auto [I1, r1] = free_image(M, e);
  auto [I2, r2] = free_image(M, f);
  PairModule<K> M1 = image_module(M, e, I1, r1);
  PairModule<K> M2 = image_module(M, f, I2, r2);
  Mat<K> iso = hstack<K>({I1, I2}, M.dim_W());
  if (iso.cols() != M.dim_W() || rank(F, iso) != M.dim_W() || M1.dim_V() + M2.dim_V() != M.dim_V())
    throw Error(Errc::InvariantViolation, "summands do not reassemble W and V");
  return {M1, M2};
}

template <class K>
std::vector<PairModule<K>> krull_schmidt(const PairModule<K>& M, const Budget& budget) {
  IndecResult<K> r = is_indecomposable(M, budget);
  if (r.decision == Decision::Indec) return {M};
  if (r.decision == Decision::Undecided)
    throw Error(Errc::UndecidedSummand, "locality of End undecided for a summand of dim V = " +
                                            std::to_string(M.dim_V()));
  auto [M1, M2] = split_by_idempotent(M, *r.idempotent);
  std::vector<PairModule<K>> out = krull_schmidt(M1, budget);
  for (auto& N : krull_schmidt(M2, budget)) out.push_back(std::move(N));
  return out;
}

namespace {

template <class K>
bool is_unit_map(const HomSpace<K>& H, const Vec<K>& phi) {
  const ArtinianPair<K>& P = *H.source.pair;
  return rank(P.field(), map_matrix(P, H.shape, phi)) == H.shape.src.total();
}

}  // namespace

template <class K>
IsoResult<K> is_isomorphic(const PairModule<K>& M, const PairModule<K>& N, const Budget& budget) {
  if (M.pair != N.pair) throw Error(Errc::PairMismatch, "isomorphism test across different pairs");
  const Field<K>& F = M.field();
  IsoResult<K> out;
  auto no = [&](std::string why) {
    out.verdict = IsoVerdict::NonIso;
    out.certificate = std::move(why);
    return out;
  };
  if (same_module(M, N)) {
    out.verdict = IsoVerdict::Iso;
    out.map = identity_map(M);
    out.certificate = "identical";
    return out;
  }
  if (M.rank != N.rank) return no("rank");
  if (M.dim_V() != N.dim_V()) return no("dim V");
  HomSpace<K> H = hom_space(M, N);
  if (H.dim() == 0) return no("Hom(M,N) = 0");
  if (H.dim() != hom_space(N, M).dim()) return no("dim Hom(M,N) != dim Hom(N,M)");
  if (H.dim() != hom_space(M, M).dim()) return no("dim Hom(M,N) != dim End(M)");

  auto found = [&](const Vec<K>& phi) {
    out.verdict = IsoVerdict::Iso;
    out.map = phi;
    return out;
  };
  const std::uint64_t n = enumeration_size(F, H.dim(), budget.enumeration);
  if (n > 0) {
    std::vector<std::uint64_t> digit(H.dim(), 0);
    Vec<K> c = zero_vec(F, H.dim());
    for (std::uint64_t k = 1; k < n; ++k) {
      for (Index j = 0;; ++j) {  // increment base-|k| counter
        if (++digit[j] < F.order()) {
          c(j) = F.element(digit[j]);
          break;
        }
        digit[j] = 0;
        c(j) = F.zero();
      }
      Vec<K> phi = H.combine(c);
      if (is_unit_map(H, phi)) {
        out.certificate = "exhaustive";
        return found(phi);
      }
    }
    return no("exhaustion of Hom(M,N)");
  }
  Rng rng(budget.seed);
  for (std::uint64_t t = 0; t < budget.trials; ++t) {
    Vec<K> phi = H.combine(random_vec(F, H.dim(), rng));
    if (is_unit_map(H, phi)) {
      out.certificate = "sampled";
      return found(phi);
    }
  }
  out.certificate = "no unit among " + std::to_string(budget.trials) + " samples";
  return out;
}

template <class K>
Vec<K> random_automorphism(const PairModule<K>& M, Rng& rng) {
  HomShape S(M.layout, M.layout);
  for (;;) {
    Vec<K> phi = random_vec(M.field(), S.size(), rng);
    if (rank(M.field(), map_matrix(*M.pair, S, phi)) == M.dim_W()) return phi;
  }
}

template <class K>
PairModule<K> transport(const PairModule<K>& M, const Vec<K>& phi) {
  HomShape S(M.layout, M.layout);
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < M.dim_V(); ++j) gens.push_back(apply_map(*M.pair, S, phi, Vec<K>(M.V.basis.col(j))));
  return make_module(M.pair, M.rank, gens);
}

#define ARTIN_INSTANTIATE(K)                                                                             \
  template struct HomSpace<K>;                                                                          \
  template HomSpace<K> hom_space(const PairModule<K>&, const PairModule<K>&);                           \
  template Vec<K> apply_map(const ArtinianPair<K>&, const HomShape&, const Vec<K>&, const Vec<K>&);     \
  template Mat<K> map_matrix(const ArtinianPair<K>&, const HomShape&, const Vec<K>&);                   \
  template Vec<K> compose(const ArtinianPair<K>&, const HomShape&, const Vec<K>&, const HomShape&,      \
                          const Vec<K>&);                                                               \
  template Vec<K> identity_map(const PairModule<K>&);                                                   \
  template Algebra<K> end_algebra(const HomSpace<K>&);                                                  \
  template Algebra<K> end_algebra(const PairModule<K>&);                                                \
  template IndecResult<K> is_indecomposable(const PairModule<K>&, const Budget&);                       \
  template std::pair<PairModule<K>, PairModule<K>> split_by_idempotent(const PairModule<K>&,            \
                                                                       const Vec<K>&);                  \
  template std::vector<PairModule<K>> krull_schmidt(const PairModule<K>&, const Budget&);               \
  template IsoResult<K> is_isomorphic(const PairModule<K>&, const PairModule<K>&, const Budget&);       \
  template Vec<K> random_automorphism(const PairModule<K>&, Rng&);                                      \
  template PairModule<K> transport(const PairModule<K>&, const Vec<K>&);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
