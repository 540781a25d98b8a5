#include "artin/rf2.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace artin {

Poly2 Poly2::from_unsorted(std::vector<Mono> ms) {
  std::sort(ms.begin(), ms.end());
  Poly2 p;
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2) p.terms_.push_back(ms[i]);
    i = j;
  }
  return p;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                b.terms_.end(), std::back_inserter(r.terms_));
  return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Poly2::Mono> ms;
  ms.reserve(a.terms_.size() * b.terms_.size());
  for (auto x : a.terms_)
    for (auto y : b.terms_) ms.push_back(x + y);  // packed degrees add fieldwise
  return Poly2::from_unsorted(std::move(ms));
}

bool Poly2::divide_exact(const Poly2& d, Poly2& quotient) const {
  if (d.is_zero()) return false;
  Poly2 r = *this;
  std::vector<Mono> q;
  const Mono ld = d.lead();
  while (!r.is_zero()) {
    Mono lr = r.lead();
    if (deg_u(lr) < deg_u(ld) || deg_v(lr) < deg_v(ld)) return false;
    Mono m = pack(deg_u(lr) - deg_u(ld), deg_v(lr) - deg_v(ld));
    q.push_back(m);
    Poly2 md;
    md.terms_.reserve(d.terms_.size());
    for (auto t : d.terms_) md.terms_.push_back(t + m);  // order preserved by shift
    r += md;
  }
  quotient = from_unsorted(std::move(q));
  return true;
}

Poly2::Mono Poly2::monomial_content() const {
  if (is_zero()) return 0;
  std::uint32_t mu = 0xffff, mv = 0xffff;
  for (auto t : terms_) {
    mu = std::min(mu, deg_u(t));
    mv = std::min(mv, deg_v(t));
  }
  return pack(mu, mv);
}

Poly2 Poly2::shift_down(Mono m) const {
  Poly2 r;
  r.terms_.reserve(terms_.size());
  for (auto t : terms_) r.terms_.push_back(t - m);
  return r;
}

bool Poly2::all_exponents_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](Mono t) { return deg_u(t) % 2 == 0 && deg_v(t) % 2 == 0; });
}

Poly2 Poly2::halve_exponents() const {
  std::vector<Mono> ms;
  ms.reserve(terms_.size());
  for (auto t : terms_) ms.push_back(pack(deg_u(t) / 2, deg_v(t) / 2));
  return from_unsorted(std::move(ms));
}

std::array<Poly2, 4> Poly2::parity_split() const {
  std::array<std::vector<Mono>, 4> parts;
  for (auto t : terms_) {
    std::uint32_t a = deg_u(t), b = deg_v(t);
    parts[(a & 1u) + 2 * (b & 1u)].push_back(pack(a & ~1u, b & ~1u));
  }
  std::array<Poly2, 4> out;
  for (int j = 0; j < 4; ++j) out[j] = from_unsorted(std::move(parts[j]));
  return out;
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::uint32_t a = deg_u(*it), b = deg_v(*it);
    std::string m;
    if (a) m += a == 1 ? "u" : "u^" + std::to_string(a);
    if (b) {
      if (!m.empty()) m += "*";
      m += b == 1 ? "v" : "v^" + std::to_string(b);
    }
    s += m.empty() ? "1" : m;
  }
  return s;
}

Poly2 Poly2::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  std::vector<Mono> ms;
  std::stringstream terms(s);
  std::string term;
  while (std::getline(terms, term, '+')) {
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + text + "'");
    if (term == "0") continue;
    std::uint32_t a = 0, b = 0;
    std::stringstream factors(term);
    std::string f;
    while (std::getline(factors, f, '*')) {
      if (f == "1") continue;
      if (f.empty() || (f[0] != 'u' && f[0] != 'v'))
        throw Error(Errc::ParseError, "bad factor '" + f + "'");
      std::uint32_t e = 1;
      if (f.size() > 1) {
        if (f[1] != '^' || f.size() < 3) throw Error(Errc::ParseError, "bad factor '" + f + "'");
        try {
          e = static_cast<std::uint32_t>(std::stoul(f.substr(2)));
        } catch (...) {
          throw Error(Errc::ParseError, "bad exponent in '" + f + "'");
        }
      }
      (f[0] == 'u' ? a : b) += e;
    }
    ms.push_back(pack(a, b));
  }
  return from_unsorted(std::move(ms));
}

// ---------------------------------------------------------------------------

Rf2::Rf2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::ZeroInversion, "zero denominator");
  simplify();
}

void Rf2::simplify() {
  if (num_.is_zero()) {
    den_ = Poly2::constant(true);
    return;
  }
  if (num_ == den_) {
    num_ = den_ = Poly2::constant(true);
    return;
  }
  Poly2::Mono cn = num_.monomial_content(), cd = den_.monomial_content();
  Poly2::Mono c = Poly2::pack(std::min(Poly2::deg_u(cn), Poly2::deg_u(cd)),
                              std::min(Poly2::deg_v(cn), Poly2::deg_v(cd)));
  if (c) {
    num_ = num_.shift_down(c);
    den_ = den_.shift_down(c);
  }
  if (den_.is_one()) return;
  constexpr std::size_t kCap = 96;
  if (num_.size() > kCap || den_.size() > kCap) return;
  Poly2 q;
  if (num_.divide_exact(den_, q)) {
    num_ = std::move(q);
    den_ = Poly2::constant(true);
    return;
  }
  if (den_.divide_exact(num_, q)) {
    num_ = Poly2::constant(true);
    den_ = std::move(q);
    return;
  }
  // small linear factors show up constantly when parameters are u, v, u+v
  static const Poly2 kLinear[] = {Poly2::parse("u+1"), Poly2::parse("v+1"), Poly2::parse("u+v"),
                                  Poly2::parse("u+v+1")};
  for (const auto& f : kLinear) {
    Poly2 qn, qd;
    while (num_.divide_exact(f, qn) && den_.divide_exact(f, qd)) {
      num_ = std::move(qn);
      den_ = std::move(qd);
    }
  }
}

Rf2 operator+(const Rf2& a, const Rf2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Rf2(a.num_ + b.num_, a.den_);
  return Rf2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rf2 operator*(const Rf2& a, const Rf2& b) {
  if (a.is_zero() || b.is_zero()) return Rf2();
  return Rf2(a.num_ * b.num_, a.den_ * b.den_);
}

Rf2 Rf2::inv() const {
  if (is_zero()) throw Error(Errc::ZeroInversion, "inverse of 0 in F2(u,v)");
  return Rf2(den_, num_);
}

bool operator==(const Rf2& a, const Rf2& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rf2 Rf2::sqrt() const {
  Poly2 w = num_ * den_;
  if (!w.all_exponents_even())
    throw Error(Errc::NotASquare, to_string() + " is not in F2(u^2, v^2)");
  return Rf2(w.halve_exponents(), den_);
}

std::array<Rf2, 4> Rf2::frobenius_coords() const {
  auto parts = (num_ * den_).parity_split();
  std::array<Rf2, 4> out;
  for (int j = 0; j < 4; ++j) out[j] = Rf2(parts[j].halve_exponents(), den_);
  return out;
}

std::string Rf2::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rf2 Rf2::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rf2(Poly2::parse(s), Poly2::constant(true));
  Poly2 den = Poly2::parse(s.substr(slash + 1));
  if (den.is_zero()) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  return Rf2(Poly2::parse(s.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rf2& a) { return os << a.to_string(); }

}  // namespace artin
