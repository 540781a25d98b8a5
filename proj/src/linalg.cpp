#include "artin/linalg.hpp"

#include <cstdint>

namespace artin {
namespace {

Rref<Fp> rref_gf2(const Field<Fp>& F, const Mat<Fp>& A) {
  const Index rows = A.rows(), cols = A.cols();
  const Index words = (cols + 63) / 64;
  std::vector<std::uint64_t> m(static_cast<std::size_t>(rows * words), 0);
  auto row = [&](Index i) { return m.data() + i * words; };
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (!A(i, j).is_zero()) row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
  std::vector<Index> piv;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    const Index w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    Index s = r;
    while (s < rows && !(row(s)[w] & bit)) ++s;
    if (s == rows) continue;
    if (s != r)
      for (Index k = 0; k < words; ++k) std::swap(row(s)[k], row(r)[k]);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || !(row(i)[w] & bit)) continue;
      for (Index k = w; k < words; ++k) row(i)[k] ^= row(r)[k];
    }
    piv.push_back(c);
    ++r;
  }
  Mat<Fp> R(rows, cols);
  const Fp zero = F.zero(), one = F.one();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) R(i, j) = (row(i)[j / 64] >> (j % 64) & 1) ? one : zero;
  return {std::move(R), std::move(piv)};
}

}  // namespace

Rref<Fp> rref(const Field<Fp>& F, Mat<Fp> A) {
  const std::uint32_t p = F.p();
  if (p == 2) return rref_gf2(F, A);
  const Index rows = A.rows(), cols = A.cols();
  std::vector<std::uint32_t> m(static_cast<std::size_t>(rows * cols));
  auto at = [&](Index i, Index j) -> std::uint32_t& { return m[static_cast<std::size_t>(i * cols + j)]; };
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) at(i, j) = static_cast<std::uint32_t>(F.typed(A(i, j)).value());
  std::vector<Index> piv;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index s = r;
    while (s < rows && at(s, c) == 0) ++s;
    if (s == rows) continue;
    if (s != r)
      for (Index j = 0; j < cols; ++j) std::swap(at(s, j), at(r, j));
    const std::uint64_t inv = static_cast<std::uint64_t>(F.from_int(at(r, c)).inv().value());
    for (Index j = c; j < cols; ++j) at(r, j) = static_cast<std::uint32_t>(at(r, j) * inv % p);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint64_t f = p - at(i, c);
      for (Index j = c; j < cols; ++j)
        if (at(r, j)) at(i, j) = static_cast<std::uint32_t>((at(i, j) + f * at(r, j)) % p);
    }
    piv.push_back(c);
    ++r;
  }
  Mat<Fp> R(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) R(i, j) = Fp(at(i, j), p);
  return {std::move(R), std::move(piv)};
}

Rref<Rf2> rref(const Field<Rf2>&, Mat<Rf2> A) {
  const Index rows = A.rows(), cols = A.cols();
  // clear denominators row by row
  std::vector<Poly2> m(static_cast<std::size_t>(rows * cols));
  auto at = [&](Index i, Index j) -> Poly2& { return m[static_cast<std::size_t>(i * cols + j)]; };
  for (Index i = 0; i < rows; ++i) {
    std::vector<Poly2> dens;
    for (Index j = 0; j < cols; ++j) {
      const Rf2& x = A(i, j);
      if (x.is_zero() || x.den().is_one()) continue;
      bool seen = false;
      for (auto& d : dens) seen = seen || d == x.den();
      if (!seen) dens.push_back(x.den());
    }
    Poly2 L = Poly2::constant(true);
    for (auto& d : dens) L *= d;
    for (Index j = 0; j < cols; ++j) {
      const Rf2& x = A(i, j);
      if (x.is_zero()) continue;
      Poly2 q;
      if (!L.divide_exact(x.den(), q)) throw Error(Errc::InvariantViolation, "denominator clearing failed");
      at(i, j) = x.num() * q;
    }
  }
  std::vector<Index> piv;
  Poly2 prev = Poly2::constant(true);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index s = r;
    while (s < rows && at(s, c).is_zero()) ++s;
    if (s == rows) continue;
    if (s != r)
      for (Index j = 0; j < cols; ++j) std::swap(at(s, j), at(r, j));
    const Poly2 p = at(r, c);
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Poly2 f = at(i, c);
      for (Index j = 0; j < cols; ++j) {
        if (j == c) continue;
        Poly2 t = p * at(i, j);
        if (!f.is_zero() && !at(r, j).is_zero()) t += f * at(r, j);
        if (t.is_zero()) {
          at(i, j) = Poly2();
          continue;
        }
        if (!t.divide_exact(prev, at(i, j)))
          throw Error(Errc::InvariantViolation, "fraction-free step lost exactness");
      }
      at(i, c) = Poly2();
    }
    prev = p;
    piv.push_back(c);
    ++r;
  }
  Mat<Rf2> R(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) R(i, j) = Rf2(0);
  for (Index i = 0; i < r; ++i) {
    const Poly2 d = at(i, piv[i]);
    for (Index j = 0; j < cols; ++j)
      if (!at(i, j).is_zero()) R(i, j) = Rf2(at(i, j), d);
  }
  return {std::move(R), std::move(piv)};
}

}  // namespace artin
