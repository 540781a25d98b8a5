#include "artin/hyperex.hpp"

#include <algorithm>
#include <map>

namespace artin {

std::set<int> semigroup_clearable(int bound) {
  if (bound < 0 || bound > kBranchT)
    throw Error(Errc::HypothesisViolated, "clearing bound must lie in [0, 19], got " + std::to_string(bound));
  std::set<int> out;
  for (int i = 0; 3 * i < bound; ++i)
    for (int j = 0; 3 * i + 7 * j < bound; ++j) out.insert(3 * i + 7 * j);
  return out;
}

std::vector<int> residual_exponents() {
  std::set<int> s = semigroup_clearable(kBranchT);
  std::vector<int> out;
  for (int e = 0; e < kBranchT; ++e)
    if (!s.count(e)) out.push_back(e);
  return out;
}

template <class K>
PairPtr<K> build_big_pair(const Field<K>& F) {
  Algebra<K> B = product_algebra<K>(
      {make_truncated_poly_algebra(F, kBranchT, "t"), make_truncated_poly_algebra(F, kBranchY, "y")});
  Vec<K> x = B.zero(), y = B.zero();
  x(7) = F.one();
  y(3) = F.one();
  y(kBranchT + 1) = F.one();
  return make_pair(std::move(B), {x, y}, "hyper-big");
}

template <class K>
PairPtr<K> build_reduced_pair(const Field<K>& F) {
  Algebra<K> D = product_algebra<K>({make_truncated_poly_algebra(F, 3, "t"), make_truncated_poly_algebra(F, 1, "y")});
  return make_pair(std::move(D), {}, "hyper-reduced");
}

template <class K>
Subspace<K> max_ideal_times_B(const ArtinianPair<K>& P) {
  return product_space(P.B, P.maxideal, full_space(P.field(), P.B.dim));
}

template <class K>
BranchModules<K> branch_modules(PairPtr<K> reduced) {
  const Field<K>& F = reduced->field();
  if (reduced->s() != 2 || reduced->comp_dim(0) != 3 || reduced->comp_dim(1) != 1)
    throw Error(Errc::PairMismatch, "branch modules live over k -> k[t]/(t^3) x k");
  // W = B_1 x B_2^n with coordinates (1, t, t^2 | copy 0, ..., copy n-1).
  auto gens = [&](Index n) {
    std::vector<Vec<K>> out;
    for (Index j = 0; j < n; ++j) {
      Vec<K> g = zero_vec(F, 3 + n);
      g(j) = F.one();
      g(3 + j) = F.one();
      out.push_back(g);
    }
    return out;
  };
  return {make_module(reduced, {1, 2}, gens(2)), make_module(reduced, {1, 3}, gens(3))};
}

template <class K>
PairModule<K> lift_to_big(const PairModule<K>& M, PairPtr<K> big) {
  const ArtinianPair<K>& P = *M.pair;
  const Field<K>& F = P.field();
  if (P.s() != big->s()) throw Error(Errc::PairMismatch, "lift needs matching component counts");
  for (Index i = 0; i < P.s(); ++i)
    if (P.comp_dim(i) > big->comp_dim(i)) throw Error(Errc::PairMismatch, "lift target component too small");
  Layout L = layout_of(*big, M.rank);
  std::vector<Vec<K>> gens;
  for (const auto& g : M.a_gens) {
    Vec<K> h = zero_vec(F, L.total());
    for (Index i = 0; i < P.s(); ++i)
      for (Index c = 0; c < M.rank[i]; ++c)
        h.segment(L.block(i, c), P.comp_dim(i)) = g.segment(M.layout.block(i, c), P.comp_dim(i));
    gens.push_back(h);
  }
  return make_module_a_span(big, M.rank, gens);
}

template <class K>
Rank1nMatrix<K> to_matrix(const PairModule<K>& M) {
  if (M.rank.size() != 2 || M.rank[0] != 1 || M.rank[1] < 1)
    throw Error(Errc::RankMismatch, "expected rank (1, n)");
  const Layout& L = M.layout;
  Rank1nMatrix<K> Q;
  Q.q2.resize(static_cast<std::size_t>(M.rank[1]));
  for (const auto& g : M.a_gens) {
    Q.u.push_back(g.segment(L.block(0, 0), L.cdim[0]));
    for (Index i = 0; i < M.rank[1]; ++i) Q.q2[i].push_back(g.segment(L.block(1, i), L.cdim[1]));
  }
  return Q;
}

template <class K>
PairModule<K> to_module(PairPtr<K> big, const Rank1nMatrix<K>& Q) {
  const Field<K>& F = big->field();
  std::vector<int> rank{1, static_cast<int>(Q.n())};
  Layout L = layout_of(*big, rank);
  std::vector<Vec<K>> gens;
  for (Index j = 0; j < Q.m(); ++j) {
    Vec<K> g = zero_vec(F, L.total());
    if (Q.u[j].size() != L.cdim[0]) throw Error(Errc::LengthMismatch, "u entry has the wrong length");
    g.segment(L.block(0, 0), L.cdim[0]) = Q.u[j];
    for (Index i = 0; i < Q.n(); ++i) {
      if (static_cast<Index>(Q.q2[i].size()) != Q.m() || Q.q2[i][j].size() != L.cdim[1])
        throw Error(Errc::LengthMismatch, "Q2 entry has the wrong shape");
      g.segment(L.block(1, i), L.cdim[1]) = Q.q2[i][j];
    }
    gens.push_back(g);
  }
  return make_module_a_span(big, rank, gens);
}

namespace {

std::string tpow(int e) { return "t^" + std::to_string(e); }

/// Row and column moves on [u; Q2] for the big pair. Step 2 keeps
/// Q2 = [I_n | 0] and restores it by a row move after every column move.
template <class K>
class Reducer {
 public:
  Reducer(const ArtinianPair<K>& P, Rank1nMatrix<K> Q)
      : P_(P), F_(P.field()), B1_(P.comps[0]), B2_(P.comps[1]), q_(std::move(Q)) {
    n_ = q_.n();
    m_ = q_.m();
    if (P.s() != 2 || P.comp_dim(0) != kBranchT || P.comp_dim(1) != kBranchY)
      throw Error(Errc::PairMismatch, "normal form needs the k[t]/(t^19) x k[y]/(y^7) pair");
    if (m_ < n_) throw Error(Errc::InvariantViolation, "fewer columns than rows in Q2");
    // A-elements whose B_1-part is t^e, e in <3,7>: x^a y^b with 7a + 3b = e.
    Vec<K> x = P.B.zero(), y = P.B.zero();
    x(7) = F_.one();
    y(3) = F_.one();
    y(kBranchT + 1) = F_.one();
    for (int e : semigroup_clearable(kBranchT)) {
      Vec<K> g = P.B.one;
      int a = 0;
      while ((e - 7 * a) % 3) ++a;
      for (int k = 0; k < a; ++k) g = P.B.mul(g, x);
      for (int k = 0; k < (e - 7 * a) / 3; ++k) g = P.B.mul(g, y);
      mono_[e] = g;
    }
  }

  NormalForm<K> run() {
    step_one();
    step_two();
    return std::move(out_);
  }

 private:
  const ArtinianPair<K>& P_;
  const Field<K>& F_;
  const Algebra<K>& B1_;
  const Algebra<K>& B2_;
  Rank1nMatrix<K> q_;
  Index n_, m_;
  std::map<int, Vec<K>> mono_;
  NormalForm<K> out_;

  void note(std::string s) { out_.trace.push_back(std::move(s)); }
  static std::string col(Index i) { return "u_" + std::to_string(i + 1); }

  Vec<K> part1(const Vec<K>& b) const { return b.head(kBranchT); }
  Vec<K> part2(const Vec<K>& b) const { return b.tail(kBranchY); }

  // column i += alpha * column j, alpha in A (B coordinates)
  void col_add(Index i, Index j, const Vec<K>& alpha) {
    q_.u[i] += B1_.mul(part1(alpha), q_.u[j]);
    Vec<K> a2 = part2(alpha);
    for (Index r = 0; r < n_; ++r) q_.q2[r][i] += B2_.mul(a2, q_.q2[r][j]);
  }
  // row r += b * row s over B_2
  void row_add(Index r, Index s, const Vec<K>& b) {
    for (Index j = 0; j < m_; ++j) q_.q2[r][j] += B2_.mul(b, q_.q2[s][j]);
  }
  void col_swap(Index i, Index j) {
    std::swap(q_.u[i], q_.u[j]);
    for (auto& row : q_.q2) std::swap(row[i], row[j]);
  }

  K coef(Index i, int e) const { return q_.u[i](e); }

  Vec<K> a_element(const std::map<int, K>& sigma) const {
    Vec<K> a = P_.B.zero();
    for (const auto& [e, c] : sigma)
      if (!c.is_zero()) a += c * mono_.at(e);
    return a;
  }

  // u_i += s(t) u_j for s in k[<3,7>], keeping Q2 = [I_n | 0].
  void add_multiple(Index i, Index j, const std::map<int, K>& sigma) {
    Vec<K> a = a_element(sigma);
    col_add(i, j, a);
    if (j < n_) {
      if (i >= n_) throw Error(Errc::InvariantViolation, "column move into the Q2-free block");
      row_add(j, i, Vec<K>(-part2(a)));
    }
  }

  void check_form() const {
    for (Index r = 0; r < n_; ++r)
      for (Index j = 0; j < m_; ++j) {
        Vec<K> want = zero_vec(F_, kBranchY);
        if (r == j) want(0) = F_.one();
        if (q_.q2[r][j] != want) throw Error(Errc::InvariantViolation, "Q2 left the form [I_n | 0]");
      }
  }

  void clear_semigroup(Index i) {
    std::map<int, K> sigma;
    for (int e : semigroup_clearable(kBranchT))
      if (!coef(i, e).is_zero()) sigma[e] = -coef(i, e);
    if (!sigma.empty()) add_multiple(i, 0, sigma);
  }

  // Kills the coefficients of t^e (e in exps) in u_j, j in targets, by
  // subtracting s(t) u_p with s solved for over k[<3,7>].
  void clear_with(Index p, const std::vector<Index>& targets, const std::vector<int>& exps) {
    const std::set<int> sg = semigroup_clearable(kBranchT);
    const std::vector<int> S(sg.begin(), sg.end());
    Mat<K> C = zeros(F_, static_cast<Index>(exps.size()), static_cast<Index>(S.size()));
    for (std::size_t c = 0; c < S.size(); ++c) {
      Vec<K> prod = B1_.mul(part1(mono_.at(S[c])), q_.u[p]);
      for (std::size_t r = 0; r < exps.size(); ++r) C(static_cast<Index>(r), static_cast<Index>(c)) = prod(exps[r]);
    }
    std::string what;
    for (int e : exps) what += (what.empty() ? "" : ",") + tpow(e);
    for (Index j : targets) {
      if (j >= n_ || j == p) continue;
      Vec<K> rhs(static_cast<Index>(exps.size()));
      for (std::size_t r = 0; r < exps.size(); ++r) rhs(static_cast<Index>(r)) = coef(j, exps[r]);
      if (is_zero_mat(rhs)) continue;
      auto sol = solve(F_, C, rhs);
      if (!sol) throw Error(Errc::InvariantViolation, "cannot clear " + what + " in " + col(j) + " by " + col(p));
      std::map<int, K> sigma;
      for (std::size_t c = 0; c < S.size(); ++c) sigma[S[c]] = -(*sol)(static_cast<Index>(c));
      add_multiple(j, p, sigma);
      clear_semigroup(j);
      note("clear " + what + " in " + col(j) + " using " + col(p));
    }
  }

  std::vector<Index> range(Index from) const {
    std::vector<Index> r;
    for (Index i = from; i < n_; ++i) r.push_back(i);
    return r;
  }

  std::optional<Index> pivot(Index from, int e) const {
    for (Index i = from; i < n_; ++i)
      if (!coef(i, e).is_zero()) return i;
    return std::nullopt;
  }

  void move_to(Index i, Index k) {
    if (i == k) return;
    col_swap(i, k);
    std::swap(q_.q2[i], q_.q2[k]);
    note("swap " + col(k) + " and " + col(i));
  }

  void step_one() {
    // Pivot columns of the residue matrix of Q2 come first.
    Mat<K> R = zeros(F_, n_, m_);
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < m_; ++j) R(i, j) = q_.q2[i][j](0);
    Rref<K> rr = rref(F_, R);
    if (rr.rank() != n_) throw Error(Errc::InvariantViolation, "Q2 has no invertible n x n submatrix");
    std::vector<Index> order = rr.pivots;
    for (Index j = 0; j < m_; ++j)
      if (std::find(order.begin(), order.end(), j) == order.end()) order.push_back(j);
    {
      Rank1nMatrix<K> p = q_;
      for (Index j = 0; j < m_; ++j) {
        p.u[j] = q_.u[order[j]];
        for (Index i = 0; i < n_; ++i) p.q2[i][j] = q_.q2[i][order[j]];
      }
      q_ = std::move(p);
    }
    // Row moves by the inverse of the leading n x n block over B_2.
    Mat<K> X = zeros(F_, n_ * kBranchY, n_ * kBranchY);
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_; ++j) X.block(i * kBranchY, j * kBranchY, kBranchY, kBranchY) = B2_.left_mult(q_.q2[i][j]);
    auto Xi = inverse(F_, X);
    if (!Xi) throw Error(Errc::InvariantViolation, "leading block of Q2 is not invertible");
    std::vector<std::vector<Vec<K>>> next(static_cast<std::size_t>(n_),
                                         std::vector<Vec<K>>(static_cast<std::size_t>(m_), zero_vec(F_, kBranchY)));
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_; ++j) {
        Vec<K> t = Xi->block(i * kBranchY, j * kBranchY, kBranchY, 1);
        for (Index c = 0; c < m_; ++c) next[i][c] += B2_.mul(t, q_.q2[j][c]);
      }
    q_.q2 = std::move(next);
    note("row moves to [I_n | *]");
    // A maps onto B_2 via (t^3, y) -> y, so the right block clears by column moves.
    for (Index c = n_; c < m_; ++c)
      for (Index i = 0; i < n_; ++i) {
        const Vec<K> g = q_.q2[i][c];
        if (is_zero_mat(g)) continue;
        std::map<int, K> sigma;
        for (Index l = 0; l < kBranchY; ++l) sigma[3 * static_cast<int>(l)] = -g(l);
        col_add(c, i, a_element(sigma));
      }
    check_form();
    note("column moves to [I_n | 0]");
    // A unit u_1.
    Index unit = -1;
    for (Index j = 0; j < m_ && unit < 0; ++j)
      if (!q_.u[j](0).is_zero()) unit = j;
    if (unit < 0) throw Error(Errc::InvariantViolation, "no unit among the entries of u");
    if (unit > 0 && unit < n_) {
      move_to(unit, 0);
    } else if (unit >= n_) {
      col_add(0, unit, P_.B.one);
      note("add " + col(unit) + " to u_1");
    }
    Mat<K> L = B1_.left_mult(q_.u[0]);
    auto w = solve(F_, L, Vec<K>(B1_.one));
    if (!w) throw Error(Errc::InvariantViolation, "u_1 is not a unit");
    for (auto& x : q_.u) x = B1_.mul(*w, x);
    note("scale the top row so u_1 = 1");
    check_form();
  }

  void step_two() {
    for (Index i = 1; i < n_; ++i) clear_semigroup(i);
    note("clear semigroup exponents in u_2..u_n");
    const std::vector<int> res = residual_exponents();
    for (Index i = 1; i < n_; ++i) {
      std::vector<K> row;
      for (int e : res) row.push_back(coef(i, e));
      out_.residual.push_back(std::move(row));
    }
    cascade();
    check_form();
    locate_zero();
    if (!out_.zero_column) fallback();
    out_.q = q_;
  }

  void cascade() {
    if (n_ < 2) return;
    std::vector<Index> rest2 = range(2), rest3 = range(3);
    std::vector<Index> not3 = rest3;
    not3.insert(not3.begin(), 1);
    if (auto p = pivot(1, 1)) {
      note("branch: some a_{i,1} != 0");
      move_to(*p, 1);
      clear_with(1, rest2, {1, 4, 8, 11});
      if (auto q = pivot(2, 2)) {
        note("branch: some a_{i,2} != 0 for i >= 3");
        move_to(*q, 2);
        clear_with(2, not3, {2, 5, 8, 11});
      } else if (auto q5 = pivot(2, 5)) {
        note("branch: only t^5 terms remain for i >= 3");
        move_to(*q5, 2);
        clear_with(2, rest3, {5});
      }
    } else if (auto p2 = pivot(1, 2)) {
      note("branch: all a_{i,1} = 0, some a_{i,2} != 0");
      move_to(*p2, 1);
      clear_with(1, rest2, {2, 5, 8, 11});
      if (auto q = pivot(2, 4)) {
        move_to(*q, 2);
        clear_with(2, rest3, {4});
      }
    } else if (auto p4 = pivot(1, 4)) {
      note("branch: a_{i,1} = a_{i,2} = 0, some a_{i,4} != 0");
      move_to(*p4, 1);
      clear_with(1, rest2, {4, 11});
      if (auto q = pivot(2, 5)) {
        note("branch: some a_{i,5} != 0 for i >= 3");
        move_to(*q, 2);
        clear_with(2, not3, {5, 8, 11});
      } else if (auto q8 = pivot(2, 8)) {
        note("branch: only t^8 terms remain for i >= 3");
        move_to(*q8, 2);
        clear_with(2, rest3, {8});
      }
    } else {
      note("branch: a_{i,1} = a_{i,2} = a_{i,4} = 0");
      for (int e : {5, 8, 11})
        if (auto p = pivot(1, e)) {
          move_to(*p, 1);
          std::vector<int> exps;
          for (int f : {5, 8, 11})
            if (f >= e) exps.push_back(f);
          clear_with(1, rest2, exps);
          break;
        }
    }
  }

  void locate_zero() {
    for (Index i = 1; i < n_; ++i)
      if (is_zero_mat(q_.u[i])) {
        out_.zero_column = i;
        note(col(i) + " = 0");
        return;
      }
  }

  // For small n the cascade may stop short; look for u_i in the
  // k[<3,7>]-span of the other columns directly.
  void fallback() {
    const std::vector<int> res = residual_exponents();
    const std::set<int> sg = semigroup_clearable(kBranchT);
    const std::vector<int> S(sg.begin(), sg.end());
    for (Index i = 1; i < n_; ++i) {
      std::vector<std::pair<Index, int>> cols;
      std::vector<Vec<K>> vecs;
      for (Index j = 1; j < m_; ++j) {
        if (j == i) continue;
        for (int e : S) {
          Vec<K> prod = B1_.mul(part1(mono_.at(e)), q_.u[j]);
          Vec<K> v(static_cast<Index>(res.size()));
          for (std::size_t r = 0; r < res.size(); ++r) v(static_cast<Index>(r)) = prod(res[r]);
          cols.push_back({j, e});
          vecs.push_back(v);
        }
      }
      if (vecs.empty()) continue;
      Vec<K> rhs(static_cast<Index>(res.size()));
      for (std::size_t r = 0; r < res.size(); ++r) rhs(static_cast<Index>(r)) = coef(i, res[r]);
      auto sol = solve(F_, columns(F_, vecs, static_cast<Index>(res.size())), rhs);
      if (!sol) continue;
      std::map<Index, std::map<int, K>> by_col;
      for (std::size_t c = 0; c < cols.size(); ++c) by_col[cols[c].first][cols[c].second] = -(*sol)(static_cast<Index>(c));
      for (const auto& [j, sigma] : by_col) add_multiple(i, j, sigma);
      clear_semigroup(i);
      check_form();
      note(col(i) + " lies in the span of the other columns");
      locate_zero();
      if (out_.zero_column) return;
      throw Error(Errc::InvariantViolation, "span reduction left " + col(i) + " nonzero");
    }
    note("no column can be cleared");
  }
};

}  // namespace

template <class K>
NormalForm<K> normalize_rank_one_n(const ArtinianPair<K>& big, Rank1nMatrix<K> Q) {
  return Reducer<K>(big, std::move(Q)).run();
}

template <class K>
Rank1nDecision<K> decide_rank_one_n(const PairModule<K>& M, const Budget& budget) {
  if (M.rank.size() != 2 || M.rank[0] != 1 || M.rank[1] < 1) throw Error(Errc::RankMismatch, "expected rank (1, n)");
  const Field<K>& F = M.field();
  Rank1nDecision<K> out;
  out.nf = normalize_rank_one_n(*M.pair, to_matrix(M));
  out.end_path = is_indecomposable(M, budget).decision;
  out.normal_form_conclusive = out.nf.zero_column.has_value();
  if (out.normal_form_conclusive) {
    Rank1nMatrix<K> q = out.nf.q;
    const Index n = q.n(), z = *out.nf.zero_column;
    if (z != n - 1) {
      std::swap(q.u[z], q.u[n - 1]);
      for (auto& row : q.q2) std::swap(row[z], row[n - 1]);
      std::swap(q.q2[z], q.q2[n - 1]);
    }
    const Layout L1 = layout_of(*M.pair, {1, static_cast<int>(n - 1)});
    std::vector<Vec<K>> g1;
    for (Index j = 0; j < q.m(); ++j) {
      if (j == n - 1) continue;
      Vec<K> g = zero_vec(F, L1.total());
      g.segment(L1.block(0, 0), L1.cdim[0]) = q.u[j];
      for (Index i = 0; i + 1 < n; ++i) g.segment(L1.block(1, i), L1.cdim[1]) = q.q2[i][j];
      g1.push_back(g);
    }
    Vec<K> g2 = zero_vec(F, kBranchY);
    g2(0) = F.one();
    PairModule<K> U1 = make_module_a_span(M.pair, {1, static_cast<int>(n - 1)}, g1);
    PairModule<K> U2 = make_module_a_span(M.pair, {0, 1}, {g2});
    if (!same_module(direct_sum(U1, U2), to_module(M.pair, q)))
      throw Error(Errc::InvariantViolation, "normal-form split does not rebuild the module");
    out.split.emplace(std::move(U1), std::move(U2));
    out.decision = Decision::Decomp;
  } else {
    out.decision = out.end_path;
  }
  out.agree = out.decision == out.end_path;
  return out;
}

template <class K>
Rank1nMatrix<K> random_rank1n(const ArtinianPair<K>& big, Index n, Index m, Rng& rng) {
  const Field<K>& F = big.field();
  if (m < n || n < 1) throw Error(Errc::RankMismatch, "need m >= n >= 1");
  for (;;) {
    Rank1nMatrix<K> Q;
    for (Index j = 0; j < m; ++j) Q.u.push_back(random_vec(F, kBranchT, rng));
    Q.q2.assign(static_cast<std::size_t>(n), {});
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j) Q.q2[i].push_back(random_vec(F, kBranchY, rng));
    bool unit = false;
    for (const auto& x : Q.u) unit = unit || !x(0).is_zero();
    Mat<K> R = zeros(F, n, m);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j) R(i, j) = Q.q2[i][j](0);
    if (unit && rank(F, R) == n) return Q;
  }
}

SweepReport nonexistence_sweep(const Field<Fp>& F, int n, std::uint64_t budget, std::uint64_t samples,
                               std::uint64_t seed) {
  if (n < 4) throw Error(Errc::HypothesisViolated, "the sweep covers n >= 4, got " + std::to_string(n));
  PairPtr<Fp> P = build_big_pair(F);
  const std::vector<int> res = residual_exponents();
  const std::uint64_t choices = 1 + res.size() * (F.order() - 1);
  SweepReport rep;
  rep.n = n;
  rep.field = F.spec().name();
  rep.seed = seed;
  rep.exhaustive_total = 1;
  for (int i = 1; i < n; ++i) rep.exhaustive_total *= choices;
  rep.exhaustive = std::min(rep.exhaustive_total, budget);
  rep.truncated = rep.exhaustive < rep.exhaustive_total;
  rep.frontier = "u = (1, c_2 t^e_2, ..., c_n t^e_n) with e_i in {1,2,4,5,8,11}, Q2 = I_n, m = n: " +
                 std::to_string(rep.exhaustive) + " of " + std::to_string(rep.exhaustive_total) +
                 "; random Q with n <= m <= n+3: " + std::to_string(samples);

  auto record = [&](const PairModule<Fp>& M, std::uint64_t id, const std::string& label) {
    Budget b;
    b.seed = seed ^ (id * 0x9e3779b97f4a7c15ULL);
    Rank1nDecision<Fp> d = decide_rank_one_n(M, b);
    if (d.normal_form_conclusive) ++rep.nf_decomposable;
    if (d.end_path == Decision::Decomp) ++rep.end_decomposable;
    if (d.decision == Decision::Indec) ++rep.indecomposable;
    if (d.normal_form_conclusive == (d.end_path == Decision::Decomp)) ++rep.agree;
    if ((!d.normal_form_conclusive || d.end_path != Decision::Decomp) && rep.failures.size() < 8)
      rep.failures.push_back(label + ": normal form " + (d.normal_form_conclusive ? "decomp" : "inconclusive") +
                             ", End path " + decision_name(d.end_path));
  };

  for (std::uint64_t code = 0; code < rep.exhaustive; ++code) {
    Rank1nMatrix<Fp> Q;
    std::string label = "u = (1";
    std::uint64_t c = code;
    for (Index j = 0; j < n; ++j) {
      Vec<Fp> u = zero_vec(F, kBranchT);
      if (j == 0) {
        u(0) = F.one();
      } else {
        std::uint64_t d = c % choices;
        c /= choices;
        if (d == 0) {
          label += ", 0";
        } else {
          int e = res[(d - 1) % res.size()];
          Fp coeff = F.element(1 + (d - 1) / res.size());
          u(e) = coeff;
          label += ", " + F.format(coeff) + "t^" + std::to_string(e);
        }
      }
      Q.u.push_back(u);
    }
    label += ")";
    Q.q2.assign(static_cast<std::size_t>(n), {});
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Vec<Fp> v = zero_vec(F, kBranchY);
        if (i == j) v(0) = F.one();
        Q.q2[i].push_back(v);
      }
    record(to_module(P, Q), code, label);
  }

  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Index m = n + static_cast<Index>(draw(rng, 4));
    Rank1nMatrix<Fp> Q = random_rank1n(*P, n, m, rng);
    record(to_module(P, Q), rep.exhaustive + s, "sample " + std::to_string(s) + " (m = " + std::to_string(m) + ")");
  }
  rep.samples = samples;
  return rep;
}

#define ARTIN_INSTANTIATE(K)                                                                  \
  template PairPtr<K> build_big_pair(const Field<K>&);                                       \
  template PairPtr<K> build_reduced_pair(const Field<K>&);                                   \
  template Subspace<K> max_ideal_times_B(const ArtinianPair<K>&);                            \
  template BranchModules<K> branch_modules(PairPtr<K>);                                        \
  template PairModule<K> lift_to_big(const PairModule<K>&, PairPtr<K>);                      \
  template Rank1nMatrix<K> to_matrix(const PairModule<K>&);                                  \
  template PairModule<K> to_module(PairPtr<K>, const Rank1nMatrix<K>&);                      \
  template NormalForm<K> normalize_rank_one_n(const ArtinianPair<K>&, Rank1nMatrix<K>);      \
  template Rank1nDecision<K> decide_rank_one_n(const PairModule<K>&, const Budget&);         \
  template Rank1nMatrix<K> random_rank1n(const ArtinianPair<K>&, Index, Index, Rng&);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
