#include "lacunae/hermite.hpp"

#include "lacunae/combinatorics.hpp"

namespace lacunae {

LambdaSeries CoeffTable::egf(unsigned order) const {
  LambdaSeries s(order);
  for (unsigned r = 0; r <= order; ++r) {
    for (unsigned m = 0; r + m <= order; ++m) {
      const BivarPoly g = (*this)(r, m);
      if (g.is_zero()) continue;
      s.coeff_mut(r + m) += g.shifted(r, 0) * BigRational(1, factorial(r + m));
    }
  }
  return s;
}

BivarPoly hermite_poly(unsigned n) {
  BivarPoly p;
  const BigInt& nf = factorial(n);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    p.add_term(BigRational(BigInt(nf / (factorial(n - 2 * k) * factorial(k)))), n - 2 * k, k);
  }
  return p;
}

LambdaSeries hermite_egf(unsigned order) {
  LambdaSeries s(order);
  for (unsigned n = 0; n <= order; ++n) {
    s.coeff_mut(n) = hermite_poly(n) * BigRational(1, factorial(n));
  }
  return s;
}

CoeffTable hermite_coeff_table() {
  return CoeffTable(
      "hermite",
      [](unsigned r, unsigned m) {
        if (m % 2 != 0) return BivarPoly{};
        const unsigned half = m / 2;
        return BivarPoly::monomial(BigRational(BigInt(factorial(r + m) / (factorial(r) * factorial(half)))), 0, half);
      },
      SupportClass{2, 0});
}

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CoeffTable random_dense_table(std::uint64_t seed) {
  return CoeffTable("random-dense/" + std::to_string(seed), [seed](unsigned r, unsigned m) {
    const std::uint64_t h = mix(mix(seed ^ (static_cast<std::uint64_t>(r) << 32U)) ^ m);
    const long num = static_cast<long>(h % 19) - 9;
    const long den = static_cast<long>((h >> 8U) % 7) + 1;
    const unsigned yp = static_cast<unsigned>((h >> 16U) % 3);
    return BivarPoly::monomial(BigRational(num, den), 0, yp);
  });
}

}  // namespace lacunae
