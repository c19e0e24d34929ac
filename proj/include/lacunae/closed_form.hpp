#pragma once

#include "lacunae/exec.hpp"
#include "lacunae/hypergeom.hpp"
#include "lacunae/lambda_series.hpp"

#include <string>
#include <vector>

namespace lacunae {

/// One s-indexed summand family of the closed form for H_{K,L}:
///
///   Σ_s λ^{s+c}/(s+c)! · P_L(x, y; K(s+c) − 2w) · y^w · (K(s+c))!/((K(s+c)−2w)! w!)
///       · pFq[ s_scale·(s+c) + upper_offsets ; lower ]( arg )
///
/// where c = lambda_shift, w = weight and P_L(x,y;P) is the Leibniz sum
/// Σ_q q! C(L,q) C(P,q) H_{L−q}(x,y) x^{P−q} (2y)^q (just x^P when L = 0).
struct PlanBranch {
  std::string label;
  unsigned lambda_shift = 0;
  unsigned weight = 0;
  unsigned beta = 0;
  BigRational s_scale = 1;
  std::vector<BigRational> upper_offsets;
  std::vector<BigRational> lower;
  MonomialArg arg;

  unsigned x_power(unsigned K, unsigned s) const { return K * (s + lambda_shift) - 2 * weight; }
  BigRational factorial_ratio(unsigned K, unsigned s) const;
  HypergeomSpec spec_at(unsigned s) const;
};

struct ClosedFormPlan {
  unsigned K = 2;
  unsigned L = 0;
  unsigned T = 1;
  std::vector<PlanBranch> branches;
};

/// Branch structure for K ≥ 2: one main family plus T−1 β-families for K = 2T,
/// or plus 2T β-families (λ-shift 1 and 2) for K = 2T + 1.
ClosedFormPlan closed_form_plan(unsigned K, unsigned L = 0);

/// Σ_q q! C(L,q) C(P,q) H_{L−q}(x,y) x^{P−q} (2y)^q
BivarPoly leibniz_prefactor(unsigned P, unsigned L);

/// H_{K,0}(λ;x,y) = Σ_n λ^n/n! H_{nK}(x,y), assembled from the closed form and
/// truncated at λ^order. K = 1 returns hermite_egf(order).
LambdaSeries closed_form_HK0(unsigned K, unsigned order, Exec exec = Exec::parallel);

/// H_{K,L}(λ;x,y) = Σ_n λ^n/n! H_{nK+L}(x,y) from the shifted closed form.
/// K = 1 is answered by shifting the plain generating function.
LambdaSeries closed_form_HKL(unsigned K, unsigned L, unsigned order, Exec exec = Exec::parallel);

/// Truncated series in two formal variables: by_mu[a].coeff(b) = [μ^a λ^b].
struct BiSeries {
  std::vector<LambdaSeries> by_mu;

  unsigned mu_order() const { return static_cast<unsigned>(by_mu.size() - 1); }
  unsigned lambda_order() const { return by_mu.front().order(); }
  /// L! · [μ^L], a series in λ.
  LambdaSeries mu_egf_coeff(unsigned L) const;
};

/// R_K(μ;λ;x,y) = e^{μx+μ²y} · H_{K,0}(λ; x+2μy, y), truncated independently in μ and λ.
BiSeries rk_series(unsigned K, unsigned mu_order, unsigned lambda_order, Exec exec = Exec::parallel);

}  // namespace lacunae
