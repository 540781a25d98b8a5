#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/fp.hpp"
#include "artin/rf2.hpp"

namespace Eigen {

template <>
struct NumTraits<artin::Fp> : GenericNumTraits<artin::Fp> {
  using Real = artin::Fp;
  using NonInteger = artin::Fp;
  using Nested = artin::Fp;
  using Literal = artin::Fp;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 2, MulCost = 3 };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<artin::Rf2> : GenericNumTraits<artin::Rf2> {
  using Real = artin::Rf2;
  using NonInteger = artin::Rf2;
  using Nested = artin::Rf2;
  using Literal = artin::Rf2;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 0, RequireInitialization = 1,
         ReadCost = 8, AddCost = 64, MulCost = 64 };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace artin {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using Rng = std::mt19937_64;

/// Portable uniform draw in [0, n); std distributions differ across libraries.
inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return n ? rng() % n : 0; }

struct FieldSpec {
  enum class Kind { prime, ratfun2 };
  Kind kind = Kind::prime;
  std::uint32_t p = 2;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && (a.kind == Kind::ratfun2 || a.p == b.p);
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
  std::string name() const {
    return kind == Kind::prime ? "F" + std::to_string(p) : std::string("F2(u,v)");
  }
};

template <class K>
class Field;

bool is_prime(std::uint32_t p);

/// The prime field F_p, p < 2^16.
template <>
class Field<Fp> {
 public:
  explicit Field(std::uint32_t p) : p_(p) {
    if (p >= (1u << 16) || !is_prime(p))
      throw Error(Errc::UnsupportedField, "F_p needs a prime p < 65536, got " + std::to_string(p));
  }
  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_finite() const { return true; }
  std::uint64_t order() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime, p_}; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t x) const { return Fp(x, p_); }
  Fp typed(Fp x) const { return Fp(x.value(), p_); }
  /// Enumeration order 0, 1, ..., p-1.
  Fp element(std::uint64_t i) const { return Fp(static_cast<std::int64_t>(i % p_), p_); }
  Fp random(Rng& rng) const { return Fp(static_cast<std::int64_t>(draw(rng, p_)), p_); }
  std::vector<Fp> default_params() const {
    std::vector<Fp> out;
    for (std::uint32_t i = 0; i < p_; ++i) out.push_back(element(i));
    return out;
  }
  std::string format(Fp x) const { return std::to_string(typed(x).value()); }
  Fp parse(const std::string& s) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

/// The rational function field F_2(u, v).
template <>
class Field<Rf2> {
 public:
  Field() = default;
  std::uint32_t characteristic() const { return 2; }
  bool is_finite() const { return false; }
  std::uint64_t order() const { return 0; }
  FieldSpec spec() const { return {FieldSpec::Kind::ratfun2, 2}; }

  Rf2 zero() const { return Rf2(0); }
  Rf2 one() const { return Rf2(1); }
  Rf2 from_int(std::int64_t x) const { return Rf2(static_cast<int>(x & 1)); }
  Rf2 typed(const Rf2& x) const { return x; }
  /// The sample list {0, 1, u, v, u+v, uv}, indexed cyclically.
  Rf2 element(std::uint64_t i) const { return samples()[i % samples().size()]; }
  /// Small random fraction with numerator and denominator of degree < 2 in each variable.
  Rf2 random(Rng& rng) const;
  std::vector<Rf2> default_params() const { return samples(); }
  std::string format(const Rf2& x) const { return x.to_string(); }
  Rf2 parse(const std::string& s) const { return Rf2::parse(s); }

  friend bool operator==(const Field&, const Field&) { return true; }
  friend bool operator!=(const Field&, const Field&) { return false; }

 private:
  static const std::vector<Rf2>& samples();
};

template <class K>
bool is_zero(const K& x) {
  return x.is_zero();
}

template <class K>
Mat<K> zeros(const Field<K>& F, Eigen::Index r, Eigen::Index c) {
  return Mat<K>::Constant(r, c, F.zero());
}
template <class K>
Vec<K> zero_vec(const Field<K>& F, Eigen::Index n) {
  return Vec<K>::Constant(n, F.zero());
}
template <class K>
Mat<K> identity(const Field<K>& F, Eigen::Index n) {
  Mat<K> I = zeros(F, n, n);
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = F.one();
  return I;
}
template <class K>
Vec<K> unit_vec(const Field<K>& F, Eigen::Index n, Eigen::Index i) {
  Vec<K> v = zero_vec(F, n);
  v(i) = F.one();
  return v;
}

/// Coerces untyped literals (from Eigen factories) to typed field elements.
template <class K, class Derived>
void retype(const Field<K>& F, Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = F.typed(m(i, j));
}

template <class Derived>
bool is_zero_mat(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class K>
Vec<K> random_vec(const Field<K>& F, Eigen::Index n, Rng& rng) {
  Vec<K> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = F.random(rng);
  return v;
}

}  // namespace artin
