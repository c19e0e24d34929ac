#include "lacunae/closed_form.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/lacunary.hpp"

#include <utility>

namespace lacunae {

BigRational PlanBranch::factorial_ratio(unsigned K, unsigned s) const {
  const unsigned top = K * (s + lambda_shift);
  return BigRational(factorial(top), factorial(top - 2 * weight) * factorial(weight));
}

HypergeomSpec PlanBranch::spec_at(unsigned s) const {
  HypergeomSpec spec;
  const BigRational base = s_scale * BigRational(static_cast<long>(s + lambda_shift));
  spec.upper.reserve(upper_offsets.size());
  for (const auto& off : upper_offsets) spec.upper.push_back(base + off);
  spec.lower = lower;
  spec.arg = arg;
  return spec;
}

namespace {

BigRational frac(long num, long den) { return {BigInt(num), BigInt(den)}; }

// Lower parameters (w + ℓ + 1)/D for ℓ = 0..D−1, skipping ℓ = D−1−w.
std::vector<BigRational> lower_params(unsigned w, unsigned D) {
  std::vector<BigRational> out;
  for (unsigned l = 0; l < D; ++l) {
    if (l + w == D - 1) continue;
    out.push_back(frac(static_cast<long>(w + l + 1), static_cast<long>(D)));
  }
  return out;
}

}  // namespace

ClosedFormPlan closed_form_plan(unsigned K, unsigned L) {
  if (K < 2) throw DomainError("closed-form plan needs K >= 2");
  const unsigned T = K / 2;
  ClosedFormPlan plan{K, L, T, {}};
  auto add = [&](std::string label, unsigned c, unsigned w, unsigned beta) {
    PlanBranch br;
    br.label = std::move(label);
    br.lambda_shift = c;
    br.weight = w;
    br.beta = beta;
    if (K % 2 == 0) {
      // (K−1)F(T−1)[s+c + (j+1)/K; ...](λ (2K y)^T)
      br.s_scale = 1;
      for (unsigned j = 0; j + 1 < K; ++j) br.upper_offsets.push_back(frac(j + 1, K));
      br.lower = lower_params(w, T);
      br.arg = MonomialArg{BigRational(2L * K).pow(T), 1, 0, T};
    } else {
      // (2K−2)F(K−1)[(s+c)/2 + (j+1)/(2K), j ≠ K−1; ...](λ² (4K y)^K / 4)
      br.s_scale = frac(1, 2);
      for (unsigned j = 0; j + 1 < 2 * K; ++j) {
        if (j == K - 1) continue;
        br.upper_offsets.push_back(frac(j + 1, 2L * K));
      }
      br.lower = lower_params(w, K);
      br.arg = MonomialArg{BigRational(4L * K).pow(K) / BigRational(4), 2, 0, K};
    }
    plan.branches.push_back(std::move(br));
  };
  add("main", 0, 0, 0);
  if (K % 2 == 0) {
    for (unsigned beta = 1; beta < T; ++beta) add("beta=" + std::to_string(beta), 1, beta, beta);
  } else {
    for (unsigned beta = 1; beta <= T; ++beta) add("beta=" + std::to_string(beta), 1, beta, beta);
    for (unsigned beta = 1; beta <= T; ++beta) add("T+beta=" + std::to_string(T + beta), 2, T + beta, beta);
  }
  return plan;
}

BivarPoly leibniz_prefactor(unsigned P, unsigned L) {
  BivarPoly out;
  for (unsigned q = 0; q <= L && q <= P; ++q) {
    const BigInt c = factorial(q) * binomial(L, q) * binomial(P, q) * (BigInt(1) << q);
    out += hermite_poly(L - q).shifted(P - q, q) * BigRational(c);
  }
  return out;
}

namespace {

// All λ-terms of one branch at fixed s.
LambdaSeries evaluate_plan_row(const PlanBranch& br, unsigned K, unsigned L, unsigned s, unsigned order) {
  LambdaSeries row(order);
  const unsigned S = s + br.lambda_shift;
  const BivarPoly outer = leibniz_prefactor(br.x_power(K, s), L).shifted(0, br.weight) *
                          (br.factorial_ratio(K, s) / BigRational(factorial(S)));
  const HypergeomSpec spec = br.spec_at(s);
  const unsigned lp = spec.arg.lp;
  // running term z^q/q! Π(a)_q / Π(b)_q
  BigRational t = 1;
  for (unsigned q = 0; S + q * lp <= order; ++q) {
    if (q > 0) {
      const BigRational qm(static_cast<long>(q - 1));
      t *= spec.arg.coef / BigRational(static_cast<long>(q));
      for (const auto& a : spec.upper) t *= a + qm;
      for (const auto& b : spec.lower) {
        const BigRational d = b + qm;
        if (d.is_zero()) throw PoleError("closed-form branch " + br.label + " reached a lower-parameter pole");
        t /= d;
      }
    }
    if (t.is_zero()) break;
    row.coeff_mut(S + q * lp) += outer.shifted(q * spec.arg.xp, q * spec.arg.yp) * t;
  }
  return row;
}

}  // namespace

LambdaSeries closed_form_HKL(unsigned K, unsigned L, unsigned order, Exec exec) {
  if (K < 1) throw DomainError("lacunary multiple K must be at least 1");
  if (K == 1) return shift(hermite_egf(order + L), L);
  const ClosedFormPlan plan = closed_form_plan(K, L);
  std::vector<std::pair<std::size_t, unsigned>> items;
  for (std::size_t bi = 0; bi < plan.branches.size(); ++bi) {
    for (unsigned s = 0; s + plan.branches[bi].lambda_shift <= order; ++s) items.emplace_back(bi, s);
  }
  std::vector<LambdaSeries> rows(items.size(), LambdaSeries(order));
  const long n_items = static_cast<long>(items.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_items; ++i) {
      const auto& [bi, s] = items[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = evaluate_plan_row(plan.branches[bi], K, L, s, order);
    }
  } else {
    for (long i = 0; i < n_items; ++i) {
      const auto& [bi, s] = items[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = evaluate_plan_row(plan.branches[bi], K, L, s, order);
    }
  }
  LambdaSeries total(order);
  for (const auto& row : rows) total += row;
  return total;
}

LambdaSeries closed_form_HK0(unsigned K, unsigned order, Exec exec) {
  if (K == 1) return hermite_egf(order);
  return closed_form_HKL(K, 0, order, exec);
}

LambdaSeries BiSeries::mu_egf_coeff(unsigned L) const {
  const LambdaSeries& c = by_mu.at(L);
  return series_scale(c, BivarPoly(BigRational(factorial(L))));
}

BiSeries rk_series(unsigned K, unsigned mu_order, unsigned lambda_order, Exec exec) {
  const LambdaSeries hk0 = closed_form_HK0(K, lambda_order, exec);
  // [μ^a] p(x + 2μy) = (2y)^a/a! · p^{(a)}(x)
  std::vector<LambdaSeries> substituted(mu_order + 1, LambdaSeries(lambda_order));
  for (unsigned a = 0; a <= mu_order; ++a) {
    const BigRational scale(BigInt(1) << a, factorial(a));
    for (unsigned b = 0; b <= lambda_order; ++b) {
      substituted[a].coeff_mut(b) = hk0.coeff(b).diff_x(a).shifted(0, a) * scale;
    }
  }
  const LambdaSeries mu_egf = hermite_egf(mu_order);
  BiSeries out{std::vector<LambdaSeries>(mu_order + 1, LambdaSeries(lambda_order))};
  for (unsigned a = 0; a <= mu_order; ++a) {
    for (unsigned i = 0; i <= a; ++i) {
      if (mu_egf.coeff(i).is_zero()) continue;
      out.by_mu[a] += series_scale(substituted[a - i], mu_egf.coeff(i));
    }
  }
  return out;
}

}  // namespace lacunae
