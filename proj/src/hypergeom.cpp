#include "lacunae/hypergeom.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"

namespace lacunae {

BigRational pochhammer(const BigRational& a, unsigned b) {
  BigRational r = 1;
  for (unsigned k = 0; k < b; ++k) r *= a + BigRational(static_cast<long>(k));
  return r;
}

namespace {

void check_poles(const HypergeomSpec& spec, unsigned s_max) {
  for (std::size_t j = 0; j < spec.lower.size(); ++j) {
    const BigRational& b = spec.lower[j];
    if (!b.is_integer() || b.sign() > 0) continue;
    // (b)_s vanishes from s = 1 - b onward; any term s > -b divides by zero
    const BigInt t = -b.num();
    if (t < s_max) {
      throw PoleError("lower parameter b_" + std::to_string(j + 1) + " = " + b.str() +
                      " hits a pole at term index " + t.get_str());
    }
  }
}

}  // namespace

BigRational pfq_term(const HypergeomSpec& spec, unsigned s) {
  check_poles(spec, s);
  BigRational t = spec.arg.coef.pow(s) / BigRational(factorial(s));
  for (const auto& a : spec.upper) t *= pochhammer(a, s);
  for (const auto& b : spec.lower) t /= pochhammer(b, s);
  return t;
}

LambdaSeries pfq_series(const HypergeomSpec& spec, unsigned order) {
  if (spec.arg.lp == 0) throw DomainError("hypergeometric argument must carry a positive power of λ");
  const unsigned s_max = order / spec.arg.lp;
  check_poles(spec, s_max);
  LambdaSeries out(order);
  // term(s+1)/term(s) = z Π(a_i+s) / (Π(b_j+s) (s+1))
  BigRational t = 1;
  for (unsigned s = 0; s <= s_max; ++s) {
    if (s > 0) {
      const BigRational sr(static_cast<long>(s - 1));
      t *= spec.arg.coef / BigRational(static_cast<long>(s));
      for (const auto& a : spec.upper) t *= a + sr;
      for (const auto& b : spec.lower) t /= b + sr;
    }
    if (t.is_zero()) break;
    out.coeff_mut(s * spec.arg.lp).add_term(t, s * spec.arg.xp, s * spec.arg.yp);
  }
  return out;
}

bool gmfc_check(unsigned n, unsigned s, const BigRational& x) {
  if (n < 2) throw DomainError("multiplication formula needs n >= 2");
  if (x.sign() <= 0) throw DomainError("multiplication formula check needs x > 0");
  const BigRational nx = BigRational(static_cast<long>(n)) * x;
  const BigRational lhs = pochhammer(nx, n * s);
  BigRational rhs = BigRational(static_cast<long>(n)).pow(s * n);
  for (unsigned j = 0; j < n; ++j) {
    rhs *= pochhammer(x + BigRational(static_cast<long>(j), static_cast<long>(n)), s);
  }
  return lhs == rhs;
}

}  // namespace lacunae
