#include "artin/field.hpp"

#include <ostream>

namespace artin {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, Fp a) {
  return os << a.value();
}

Fp Field<Fp>::parse(const std::string& s) const {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw Error(Errc::ParseError, "trailing characters in '" + s + "'");
    return from_int(v);
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error(Errc::ParseError, "not an integer: '" + s + "'");
  }
}

const std::vector<Rf2>& Field<Rf2>::samples() {
  static const std::vector<Rf2> s = {Rf2(0), Rf2(1), Rf2::u(), Rf2::v(), Rf2::u() + Rf2::v(),
                                     Rf2::u() * Rf2::v()};
  return s;
}

Rf2 Field<Rf2>::random(Rng& rng) const {
  auto poly = [&](bool nonzero) {
    for (;;) {
      Poly2 p;
      std::uint64_t bits = draw(rng, 16);
      for (std::uint32_t k = 0; k < 4; ++k)
        if (bits >> k & 1u) p += Poly2::monomial(k & 1u, k >> 1);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  Poly2 n = poly(false);
  Poly2 d = draw(rng, 2) ? poly(true) : Poly2::constant(true);
  return Rf2(n, d);
}

}  // namespace artin
