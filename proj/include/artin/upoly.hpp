#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "artin/field.hpp"

namespace artin {

/// Dense univariate polynomial, coefficients from low to high degree.
/// The zero polynomial has no coefficients; degree() is then -1.
template <class K>
struct UPoly {
  std::vector<K> c;

  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const K& lead() const { return c.back(); }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : K(0); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (a.c[i] != b.c[i]) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  UPoly scaled(const K& s) const {
    UPoly r = *this;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
  }
};

template <class K>
UPoly<K> constant_poly(const K& a) {
  return UPoly<K>({a});
}
template <class K>
UPoly<K> x_poly(const Field<K>& F) {
  return UPoly<K>({F.zero(), F.one()});
}
/// x^n
template <class K>
UPoly<K> x_pow(const Field<K>& F, int n) {
  std::vector<K> c(n + 1, F.zero());
  c[n] = F.one();
  return UPoly<K>(std::move(c));
}

template <class K>
UPoly<K> monic(const UPoly<K>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.lead().inv());
}

/// Quotient and remainder; throws ZeroInversion for g = 0.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& f, const UPoly<K>& g) {
  if (g.is_zero()) throw Error(Errc::ZeroInversion, "polynomial division by zero");
  UPoly<K> r = f;
  int dg = g.degree();
  if (r.degree() < dg) return {UPoly<K>(), r};
  std::vector<K> q(r.degree() - dg + 1, K(0));
  K li = g.lead().inv();
  while (!r.is_zero() && r.degree() >= dg) {
    int s = r.degree() - dg;
    K m = r.lead() * li;
    q[s] = m;
    for (int i = 0; i <= dg; ++i) r.c[s + i] -= m * g.c[i];
    r.c.pop_back();
    r.trim();
  }
  return {UPoly<K>(std::move(q)), r};
}

template <class K>
UPoly<K> rem(const UPoly<K>& f, const UPoly<K>& g) {
  return divmod(f, g).second;
}

/// Monic gcd (zero when both inputs vanish).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns (g, s, t) with s a + t b = g, g monic.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd(UPoly<K> a, UPoly<K> b) {
  UPoly<K> s0 = constant_poly(K(1)), s1, t0, t1 = constant_poly(K(1));
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  K li = a.lead().inv();
  return {a.scaled(li), s0.scaled(li), t0.scaled(li)};
}

template <class K>
UPoly<K> derivative(const UPoly<K>& f) {
  if (f.degree() < 1) return {};
  std::vector<K> d(f.c.size() - 1, K(0));
  for (std::size_t i = 1; i < f.c.size(); ++i) {
    K m = f.c[i];
    for (std::size_t k = 1; k < i; ++k) m += f.c[i];
    d[i - 1] = m;
  }
  return UPoly<K>(std::move(d));
}

template <class K>
UPoly<K> mulmod(const UPoly<K>& a, const UPoly<K>& b, const UPoly<K>& m) {
  return rem(a * b, m);
}

template <class K>
UPoly<K> powmod(UPoly<K> a, unsigned long long e, const UPoly<K>& m) {
  UPoly<K> r = rem(constant_poly(K(1)), m);
  a = rem(a, m);
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    e >>= 1;
    if (e) a = mulmod(a, a, m);
  }
  return r;
}

template <class K>
std::string to_string(const Field<K>& F, const UPoly<K>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string co = F.format(f.c[i]);
    bool paren = co.find(' ') != std::string::npos;
    if (i == 0) {
      out += co;
    } else {
      if (!f.c[i].is_one()) out += (paren ? "(" + co + ")" : co) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

struct Factor {
  UPoly<Fp> f;
  int mult;
};

/// Complete factorization over F_p into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). The leading unit is dropped.
std::vector<Factor> factor_univariate(const Field<Fp>& F, const UPoly<Fp>& f, std::uint64_t seed = 0);

/// Factorization request over F2(u,v); always throws UnsupportedField.
std::vector<Factor> factor_univariate(const Field<Rf2>& F, const UPoly<Rf2>& f, std::uint64_t seed = 0);

bool is_irreducible(const Field<Fp>& F, const UPoly<Fp>& f);

}  // namespace artin
