#include "lacunae/normal_order.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"

namespace lacunae {

NormalOrderResult normal_order(const SemiLinearOp& op, unsigned order) {
  LambdaSeries T = LambdaSeries::constant(BivarPoly::x(), order);
  // [μ^k] q(T) only involves T_0..T_k, so T_{k+1} = [μ^k] q(T) / (k+1)
  for (unsigned k = 0; k < order; ++k) {
    const LambdaSeries qT = compose_poly(op.q, T.truncated(k));
    T.coeff_mut(k + 1) = qT.coeff(k) * BigRational(1, static_cast<long>(k + 1));
  }
  // g' = v(T) g
  const LambdaSeries vT = compose_poly(op.v, T);
  LambdaSeries g = LambdaSeries::constant(BivarPoly(1), order);
  for (unsigned k = 0; k < order; ++k) {
    BivarPoly acc;
    for (unsigned j = 0; j <= k; ++j) acc += vT.coeff(j) * g.coeff(k - j);
    g.coeff_mut(k + 1) = acc * BigRational(1, static_cast<long>(k + 1));
  }
  return {std::move(T), std::move(g)};
}

LambdaSeries exp_op_direct(const SemiLinearOp& op, unsigned order, const BivarPoly& f) {
  LambdaSeries out(order);
  BivarPoly dk = f;
  for (unsigned k = 0; k <= order; ++k) {
    out.coeff_mut(k) = dk * BigRational(1, factorial(k));
    if (k < order) dk = op.apply(dk);
  }
  return out;
}

LambdaSeries apply_exp_op(const SemiLinearOp& op, unsigned order, const BivarPoly& f) {
  const LambdaSeries direct = exp_op_direct(op, order, f);
  const NormalOrderResult no = normal_order(op, order);
  const LambdaSeries ordered = series_mul(no.g, compose_poly(f, no.T), Exec::serial);
  if (!(direct == ordered)) {
    for (unsigned k = 0; k <= order; ++k) {
      if (auto d = first_difference(direct.coeff(k), ordered.coeff(k))) {
        throw ConsistencyError("normal-ordered and direct e^{μD} f differ at μ^" + std::to_string(k) + ", x^" +
                               std::to_string(d->mono.xp) + " y^" + std::to_string(d->mono.yp));
      }
    }
  }
  return direct;
}

namespace {

// e^{cλ D^m} h as a λ-series: [λ^k] = c^k/k! D^{mk} h
LambdaSeries exp_derivative_power(unsigned m, const BigRational& c, const BivarPoly& h, unsigned order) {
  LambdaSeries out(order);
  BivarPoly dk = h;
  BigRational ck = 1;
  for (unsigned k = 0; k <= order; ++k) {
    out.coeff_mut(k) = dk * (ck / BigRational(factorial(k)));
    dk = dk.diff_x(m);
    ck *= c;
  }
  return out;
}

}  // namespace

bool crofton_check(unsigned m, const BigRational& y_coef, const BivarPoly& f, const BivarPoly& g, unsigned order) {
  if (m < 1) throw DomainError("Crofton identity needs m >= 1");
  const LambdaSeries lhs = exp_derivative_power(m, y_coef, f * g, order);

  const LambdaSeries h = exp_derivative_power(m, y_coef, g, order);
  // A = x + m c λ D^{m−1} acting on λ-series of polynomials
  const BigRational mc = BigRational(static_cast<long>(m)) * y_coef;
  auto apply_A = [&](const LambdaSeries& s) {
    LambdaSeries r(order);
    for (unsigned k = 0; k <= order; ++k) {
      r.coeff_mut(k) = s.coeff(k).shifted(1, 0);
      if (k > 0) r.coeff_mut(k) += s.coeff(k - 1).diff_x(m - 1) * mc;
    }
    return r;
  };
  // f(A) h = Σ_j f_j(y) A^j h, by Horner on the x-coefficients of f
  const int deg = f.deg_x();
  LambdaSeries rhs(order);
  if (deg >= 0) {
    std::vector<BivarPoly> by_x(static_cast<std::size_t>(deg) + 1);
    for (const auto& [mono, c] : f) by_x[mono.xp].add_term(c, 0, mono.yp);
    rhs = series_scale(h, by_x[static_cast<std::size_t>(deg)]);
    for (int j = deg - 1; j >= 0; --j) {
      rhs = apply_A(rhs);
      rhs += series_scale(h, by_x[static_cast<std::size_t>(j)]);
    }
  }
  return lhs == rhs;
}

}  // namespace lacunae
