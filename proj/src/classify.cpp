#include "artin/classify.hpp"

#include <type_traits>

namespace artin {

const char* case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::Dim3Special: return "Dim3Special";
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2a: return "Case2a";
    case CaseLabel::Case2b: return "Case2b";
    case CaseLabel::Case2c: return "Case2c";
    case CaseLabel::Case2d: return "Case2d";
    case CaseLabel::Undecided: return "Undecided";
  }
  return "?";
}

CaseLabel parse_case(const std::string& s) {
  for (CaseLabel c : {CaseLabel::Dim3Special, CaseLabel::Case1, CaseLabel::Case2a, CaseLabel::Case2b,
                      CaseLabel::Case2c, CaseLabel::Case2d, CaseLabel::Undecided})
    if (s == case_name(c)) return c;
  throw Error(Errc::ParseError, "unknown case label '" + s + "'");
}

template <class K>
CandidateStream<K>::CandidateStream(const Algebra<K>& E, std::uint64_t seed, std::uint64_t random_draws)
    : E_(E), rng_(seed), draws_(random_draws) {
  enum_size_ = enumeration_size(E.field, E.dim, std::uint64_t{1} << 20);
  exhaustive_ = enum_size_ > 0;
}

template <class K>
bool CandidateStream<K>::next(Vec<K>& out) {
  const std::uint64_t n = static_cast<std::uint64_t>(E_.dim);
  for (;;) {
    switch (stage_) {
      case 0:
        if (i_ < n) {
          out = E_.basis(static_cast<Index>(i_++));
          return true;
        }
        stage_ = 1;
        i_ = 0;
        j_ = 1;
        break;
      case 1:
        if (j_ >= n) {
          ++i_;
          j_ = i_ + 1;
        }
        if (i_ + 1 < n && j_ < n) {
          out = E_.basis(static_cast<Index>(i_)) + E_.basis(static_cast<Index>(j_));
          ++j_;
          return true;
        }
        stage_ = exhaustive_ ? 2 : 3;
        i_ = 1;
        break;
      case 2:
        if (i_ < enum_size_) {
          if constexpr (std::is_same_v<K, Fp>) {
            out.resize(E_.dim);
            std::uint64_t r = i_++;
            for (Index k = 0; k < E_.dim; ++k) {
              out(k) = E_.field.from_int(static_cast<std::int64_t>(r % E_.field.p()));
              r /= E_.field.p();
            }
            return true;
          }
        }
        stage_ = 3;
        i_ = 0;
        break;
      case 3:
        if (exhaustive_) return false;  // random draws add nothing after a full scan
        if (i_ < draws_) {
          ++i_;
          out = random_vec(E_.field, E_.dim, rng_);
          return true;
        }
        return false;
    }
  }
}

namespace {

template <class K>
bool independent(const Algebra<K>& D, std::initializer_list<Vec<K>> vs) {
  return check_linear_independence(D, std::vector<Vec<K>>(vs));
}

/// Pairs (a, b) drawn from a prefix of the candidate stream.
template <class K, class Accept, class Pair>
bool search_pairs(const Algebra<K>& D, std::uint64_t seed, Accept&& accept, Pair&& pair,
                  std::vector<Vec<K>>& out) {
  CandidateStream<K> s(D, seed);
  std::vector<Vec<K>> pool;
  Vec<K> x;
  while (s.next(x) && pool.size() < 2000) {
    if (!accept(x)) continue;
    for (const auto& y : pool)
      if (pair(y, x)) {
        out = {y, x};
        return true;
      }
    pool.push_back(x);
  }
  return false;
}

}  // namespace

std::vector<Vec<Fp>> split_into_local_factors(const Algebra<Fp>& D) {
  const Field<Fp>& F = D.field;
  Subspace<Fp> rad = radical(D);
  Quotient<Fp> Q = quotient_by_ideal(D, rad);
  const Algebra<Fp>& S = Q.alg;
  if (!is_commutative(S)) return {};
  // refine {1} by splitting corner algebras until each is one-dimensional
  std::vector<Vec<Fp>> done, todo{S.one};
  Rng rng(0);
  while (!todo.empty()) {
    Vec<Fp> e = todo.back();
    todo.pop_back();
    Subalgebra<Fp> C = corner_algebra(S, e);
    if (C.alg.dim == 1) {
      done.push_back(e);
      continue;
    }
    auto f = search_split_idempotent(C.alg, 64, rng);
    if (!f) return {};  // a field factor larger than F_p
    Vec<Fp> fe = mul(F, C.incl, Mat<Fp>(*f));
    todo.push_back(fe);
    todo.push_back(Vec<Fp>(e - fe));
  }
  std::vector<Vec<Fp>> out;
  for (auto& e : done) out.push_back(lift_idempotent(D, Vec<Fp>(mul(F, Q.lift, Mat<Fp>(e)))));
  // deterministic order: by the first nonzero coordinate
  std::sort(out.begin(), out.end(), [](const Vec<Fp>& a, const Vec<Fp>& b) {
    for (Index i = 0; i < a.size(); ++i) {
      bool za = a(i).is_zero(), zb = b(i).is_zero();
      if (za != zb) return !za;
    }
    return false;
  });
  return out;
}

template <class K>
CaseResult<K> classify_case(const Algebra<K>& D, std::uint64_t seed) {
  if (D.dim < 3) throw Error(Errc::DimensionTooSmall, "classification needs dim D1 >= 3");
  CaseResult<K> res;
  auto sq = [&](const Vec<K>& x) { return D.mul(x, x); };
  auto square_zero = [&](const Vec<K>& x) { return is_zero_mat(sq(x)); };
  auto pair2a = [&](const Vec<K>& a, const Vec<K>& b) {
    return is_zero_mat(D.mul(a, b)) && is_zero_mat(D.mul(b, a)) && independent(D, {D.one, a, b});
  };
  if (D.dim == 3) {
    if (search_pairs(D, seed, square_zero, pair2a, res.witnesses)) {
      res.label = CaseLabel::Dim3Special;
      return res;
    }
    res.note = "dimension 3 without a square-zero pair";
    return res;
  }
  // Case 1: {1, a, a^2} independent; b completes it to four independent elements
  {
    CandidateStream<K> s(D, seed);
    Vec<K> a;
    while (s.next(a)) {
      Vec<K> a2 = sq(a);
      if (!independent(D, {D.one, a, a2})) continue;
      for (Index i = 0; i < D.dim; ++i)
        if (independent(D, {D.one, a, a2, D.basis(i)})) {
          res.label = CaseLabel::Case1;
          res.witnesses = {a, D.basis(i)};
          return res;
        }
    }
    res.note = s.exhausted_all() ? "case 1 excluded by full enumeration" : "case 1 not found by sampling";
  }
  // Case 2b: a^2 = b^2 = 0 and {1, a, ab, b} independent
  if (search_pairs(
          D, seed, square_zero,
          [&](const Vec<K>& a, const Vec<K>& b) { return independent(D, {D.one, a, D.mul(a, b), b}); },
          res.witnesses)) {
    res.label = CaseLabel::Case2b;
    return res;
  }
  const bool commutative = is_commutative(D);
  // Case 2c: char 2, local, residue field purely inseparable of degree >= 4
  if constexpr (std::is_same_v<K, Rf2>) {
    if (commutative) {
      Subspace<Rf2> N = nilradical_commutative(D);
      Quotient<Rf2> Q = quotient_by_ideal(D, N);
      if (Q.alg.dim >= 4 && squares_into_scalars(Q.alg)) {
        Subspace<Rf2> k1 = span(D.field, Mat<Rf2>(D.one));
        auto sq_scalar = [&](const Vec<Rf2>& x) { return k1.contains(sq(x)); };
        if (search_pairs(
                D, seed, sq_scalar,
                [&](const Vec<Rf2>& a, const Vec<Rf2>& b) { return independent(D, {D.one, a, D.mul(a, b), b}); },
                res.witnesses)) {
          res.label = CaseLabel::Case2c;
          return res;
        }
      }
    }
  }
  // Case 2d: k = F_2 and D a product of at least four local factors with residue field k
  if constexpr (std::is_same_v<K, Fp>) {
    if (D.field.p() == 2 && commutative) {
      auto f = split_into_local_factors(D);
      if (f.size() >= 4) {
        res.label = CaseLabel::Case2d;
        res.witnesses = f;
        return res;
      }
    }
  }
  if (search_pairs(D, seed, square_zero, pair2a, res.witnesses)) {
    res.label = CaseLabel::Case2a;
    return res;
  }
  res.witnesses.clear();
  return res;
}

template class CandidateStream<Fp>;
template class CandidateStream<Rf2>;
template CaseResult<Fp> classify_case(const Algebra<Fp>&, std::uint64_t);
template CaseResult<Rf2> classify_case(const Algebra<Rf2>&, std::uint64_t);

}  // namespace artin
