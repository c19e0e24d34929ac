#pragma once

#include "lacunae/lambda_series.hpp"
#include "lacunae/rational.hpp"

#include <vector>

namespace lacunae {

/// Pochhammer rising factorial (a)_b = Γ(a+b)/Γ(a) = a (a+1) ... (a+b-1).
BigRational pochhammer(const BigRational& a, unsigned b);

/// coef · λ^lp · x^xp · y^yp
struct MonomialArg {
  BigRational coef = 1;
  unsigned lp = 1;
  unsigned xp = 0;
  unsigned yp = 0;
  friend bool operator==(const MonomialArg&, const MonomialArg&) = default;
};

/// pFq[upper; lower](arg) with a monomial argument.
struct HypergeomSpec {
  std::vector<BigRational> upper;
  std::vector<BigRational> lower;
  MonomialArg arg;
  friend bool operator==(const HypergeomSpec&, const HypergeomSpec&) = default;
};

/// Π(a_i)_s / (Π(b_j)_s · s!) · coef^s, the rational part of term s.
/// Throws PoleError if some b_j + t = 0 for t < s.
BigRational pfq_term(const HypergeomSpec& spec, unsigned s);

/// Σ_s z^s/s! Π(a_i)_s/Π(b_j)_s for every s with s·lp ≤ order, as an exact series.
LambdaSeries pfq_series(const HypergeomSpec& spec, unsigned order);

/// Checks the Pochhammer form of the Gauss–Legendre multiplication formula,
///   Π_{k=0}^{ns-1} (nx + k) = n^{sn} Π_{j=0}^{n-1} (x + j/n)_s,
/// i.e. Γ(n(s+x))/Γ(nx) on the left. Requires n ≥ 2 and x > 0.
bool gmfc_check(unsigned n, unsigned s, const BigRational& x);

}  // namespace lacunae
