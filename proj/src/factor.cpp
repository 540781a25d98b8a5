#include <algorithm>

#include "artin/upoly.hpp"

namespace artin {
namespace {

using P = UPoly<Fp>;

P exact_div(const P& f, const P& g) { return divmod(f, g).first; }

/// f(x) = g(x^p): returns g (p-th roots of F_p coefficients are themselves).
P pth_root(const P& f, std::uint32_t p) {
  std::vector<Fp> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.c[i]);
  return P(std::move(c));
}

void squarefree(const Field<Fp>& F, const P& f, int scale, std::vector<std::pair<P, int>>& out) {
  if (f.degree() < 1) return;
  P c = gcd(f, derivative(f));
  P w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    P y = gcd(w, c);
    P z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({z, i * scale});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) squarefree(F, monic(pth_root(c, F.p())), scale * static_cast<int>(F.p()), out);
}

std::vector<std::pair<P, int>> distinct_degree(const Field<Fp>& F, P g) {
  std::vector<std::pair<P, int>> out;
  P x = x_poly(F);
  P h = rem(x, g);
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, F.p(), g);
    P gd = gcd(g, h - x);
    if (gd.degree() > 0) {
      out.push_back({gd, d});
      g = exact_div(g, gd);
      h = rem(h, g);
    }
  }
  if (g.degree() > 0) out.push_back({g, g.degree()});
  return out;
}

void equal_degree(const Field<Fp>& F, const P& g, int d, Rng& rng, std::vector<P>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const std::uint32_t p = F.p();
  for (;;) {
    std::vector<Fp> ac(g.degree());
    for (auto& x : ac) x = F.random(rng);
    P a(std::move(ac));
    if (a.degree() < 1) continue;
    P b;
    if (p == 2) {
      // absolute trace a + a^2 + ... + a^(2^(d-1))
      P t = a;
      b = a;
      for (int j = 1; j < d; ++j) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      P t = a, n = a;
      for (int j = 1; j < d; ++j) {
        t = powmod(t, p, g);
        n = mulmod(n, t, g);
      }
      b = powmod(n, (p - 1) / 2, g) - constant_poly(F.one());
    }
    P s = gcd(g, b);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(F, s, d, rng, out);
      equal_degree(F, exact_div(g, s), d, rng, out);
      return;
    }
  }
}

bool poly_less(const P& a, const P& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.c[i].value() != b.c[i].value()) return a.c[i].value() < b.c[i].value();
  return false;
}

}  // namespace

std::vector<Factor> factor_univariate(const Field<Fp>& F, const UPoly<Fp>& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(Errc::ZeroInversion, "cannot factor the zero polynomial");
  Rng rng(seed);
  std::vector<std::pair<P, int>> sqf;
  squarefree(F, monic(f), 1, sqf);
  std::vector<Factor> out;
  for (auto& [g, m] : sqf)
    for (auto& [h, d] : distinct_degree(F, g)) {
      std::vector<P> parts;
      equal_degree(F, h, d, rng, parts);
      for (auto& q : parts) out.push_back({q, m});
    }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.f != b.f) return poly_less(a.f, b.f);
    return a.mult < b.mult;
  });
  // merge repeats that can arise from the p-th root recursion
  std::vector<Factor> merged;
  for (auto& fa : out) {
    if (!merged.empty() && merged.back().f == fa.f)
      merged.back().mult += fa.mult;
    else
      merged.push_back(fa);
  }
  return merged;
}

std::vector<Factor> factor_univariate(const Field<Rf2>&, const UPoly<Rf2>&, std::uint64_t) {
  throw Error(Errc::UnsupportedField, "polynomial factorization is only available over prime fields");
}

bool is_irreducible(const Field<Fp>& F, const UPoly<Fp>& f) {
  if (f.degree() < 1) return false;
  auto fs = factor_univariate(F, f);
  return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace artin
