#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "artin/error.hpp"

namespace artin {

/// Polynomial in F_2[u, v]. Monomials are packed as (deg_u << 16) | deg_v and
/// kept sorted ascending with no repeats (coefficients are all 1).
class Poly2 {
 public:
  using Mono = std::uint32_t;

  Poly2() = default;
  static Poly2 constant(bool one) { return one ? monomial(0, 0) : Poly2(); }
  static Poly2 monomial(std::uint32_t du, std::uint32_t dv) {
    Poly2 p;
    p.terms_.push_back(pack(du, dv));
    return p;
  }

  static Mono pack(std::uint32_t du, std::uint32_t dv) { return (du << 16) | dv; }
  static std::uint32_t deg_u(Mono m) { return m >> 16; }
  static std::uint32_t deg_v(Mono m) { return m & 0xffffu; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0] == 0; }
  const std::vector<Mono>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Leading monomial in (deg_u, deg_v) lexicographic order.
  Mono lead() const { return terms_.back(); }

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2& operator+=(const Poly2& b) { return *this = *this + b; }
  Poly2& operator*=(const Poly2& b) { return *this = *this * b; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  /// Exact quotient when `d` divides `*this`; false otherwise.
  bool divide_exact(const Poly2& d, Poly2& quotient) const;
  /// Largest monomial dividing every term.
  Mono monomial_content() const;
  Poly2 shift_down(Mono m) const;
  bool all_exponents_even() const;
  /// Halves every exponent; requires all_exponents_even().
  Poly2 halve_exponents() const;
  /// Splits into the four parity classes (u^a v^b with a, b in {0,1}), each
  /// with the parity monomial divided out: p = sum m_j * q_j(u^2, v^2).
  std::array<Poly2, 4> parity_split() const;

  std::string to_string() const;
  static Poly2 parse(const std::string& s);

 private:
  static Poly2 from_unsorted(std::vector<Mono> ms);
  std::vector<Mono> terms_;
};

/// Element of F_2(u, v) stored as an unreduced fraction num/den.
///
/// Equality cross-multiplies. `simplify()` strips common monomials and
/// cancels when one side divides the other; correctness never relies on it.
class Rf2 {
 public:
  Rf2() : num_(), den_(Poly2::constant(true)) {}
  Rf2(int literal)  // NOLINT: Eigen needs implicit construction from 0/1
      : num_(Poly2::constant(literal % 2 != 0)), den_(Poly2::constant(true)) {}
  Rf2(Poly2 num, Poly2 den);
  static Rf2 u() { return Rf2(Poly2::monomial(1, 0), Poly2::constant(true)); }
  static Rf2 v() { return Rf2(Poly2::monomial(0, 1), Poly2::constant(true)); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  friend Rf2 operator+(const Rf2& a, const Rf2& b);
  friend Rf2 operator-(const Rf2& a, const Rf2& b) { return a + b; }
  friend Rf2 operator*(const Rf2& a, const Rf2& b);
  friend Rf2 operator/(const Rf2& a, const Rf2& b) { return a * b.inv(); }
  Rf2 operator-() const { return *this; }
  Rf2& operator+=(const Rf2& b) { return *this = *this + b; }
  Rf2& operator-=(const Rf2& b) { return *this = *this + b; }
  Rf2& operator*=(const Rf2& b) { return *this = *this * b; }
  Rf2& operator/=(const Rf2& b) { return *this = *this / b; }
  Rf2 inv() const;

  friend bool operator==(const Rf2& a, const Rf2& b);
  friend bool operator!=(const Rf2& a, const Rf2& b) { return !(a == b); }

  /// Square root; the element must lie in F_2(u^2, v^2).
  Rf2 sqrt() const;
  /// Coordinates r_j with x = sum_j r_j^2 * m_j over m = (1, u, v, uv).
  std::array<Rf2, 4> frobenius_coords() const;

  void simplify();
  std::string to_string() const;
  static Rf2 parse(const std::string& s);
  friend std::ostream& operator<<(std::ostream& os, const Rf2& a);

 private:
  Poly2 num_, den_;
};

}  // namespace artin
