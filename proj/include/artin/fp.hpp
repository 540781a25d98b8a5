#pragma once

#include <cstdint>
#include <iosfwd>

#include "artin/error.hpp"

namespace artin {

/// Element of a prime field F_p with p < 2^16.
///
/// The modulus travels with the value. An element built from a bare integer
/// (`Fp(0)`, `Fp(1)`, as Eigen does for zero/identity) has no modulus yet; it
/// adopts the modulus of the first typed operand it meets. Code that needs a
/// typed element asks the owning `Field<Fp>` for it.
class Fp {
 public:
  constexpr Fp() = default;
  constexpr Fp(int literal) : v_(literal), p_(0) {}  // NOLINT: Eigen needs implicit
  Fp(std::int64_t v, std::uint32_t p) : v_(reduce(v, p)), p_(p) {}

  std::uint32_t modulus() const { return p_; }
  /// Residue in [0, p); a literal reports its raw integer.
  std::int64_t value() const { return v_; }
  bool is_zero() const { return p_ ? v_ == 0 : v_ == 0; }
  bool is_one() const { return p_ ? v_ == 1 : v_ == 1; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return Fp(static_cast<int>(a.v_ + b.v_));
    std::int64_t s = a.in(p) + b.in(p);
    return raw(s >= p ? s - p : s, p);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return Fp(static_cast<int>(a.v_ - b.v_));
    std::int64_t s = a.in(p) - b.in(p);
    return raw(s < 0 ? s + p : s, p);
  }
  friend Fp operator*(Fp a, Fp b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return Fp(static_cast<int>(a.v_ * b.v_));
    return raw((a.in(p) * b.in(p)) % p, p);
  }
  Fp operator-() const { return p_ ? raw(v_ ? p_ - v_ : 0, p_) : Fp(static_cast<int>(-v_)); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this * b.inv(); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  Fp inv() const {
    if (is_zero()) throw Error(Errc::ZeroInversion, "inverse of 0 in F_p");
    if (!p_) {
      if (v_ == 1 || v_ == -1) return *this;
      throw Error(Errc::UnsupportedField, "inverse of an untyped integer literal");
    }
    // extended Euclid on (v, p)
    std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
    while (r1) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
      t = s0 - q * s1; s0 = s1; s1 = t;
    }
    return Fp(s0, p_);
  }

  friend bool operator==(Fp a, Fp b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return a.v_ == b.v_;
    return a.in(p) == b.in(p);
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, Fp a);

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    if (!p) return v;
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  static Fp raw(std::int64_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::int64_t in(std::uint32_t p) const { return p_ ? v_ : reduce(v_, p); }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace artin
