#pragma once

#include "lacunae/bivar_poly.hpp"
#include "lacunae/lambda_series.hpp"

namespace lacunae {

/// D = q(x) d/dx + v(x), with q and v polynomials in x whose coefficients may
/// depend on y.
struct SemiLinearOp {
  BivarPoly q;
  BivarPoly v;

  BivarPoly apply(const BivarPoly& f) const { return q * f.diff_x() + v * f; }
};

/// e^{μD} f(x) = g(μ;x) · f(T(μ;x)), both as truncated series in μ.
struct NormalOrderResult {
  LambdaSeries T;  // substitution function, T(0;x) = x
  LambdaSeries g;  // prefactor function, g(0;x) = 1
  unsigned order() const { return T.order(); }
};

/// Solves ∂T/∂μ = q(T), T(0) = x and ∂ ln g/∂μ = v(T), g(0) = 1 degree by
/// degree in μ.
NormalOrderResult normal_order(const SemiLinearOp& op, unsigned order);

/// Σ_{k≤order} μ^k D^k f / k!, by iterating D on the polynomial.
LambdaSeries exp_op_direct(const SemiLinearOp& op, unsigned order, const BivarPoly& f);

/// e^{μD} f computed both directly and as g · f∘T. Throws ConsistencyError if
/// the two routes differ; otherwise returns the common value.
LambdaSeries apply_exp_op(const SemiLinearOp& op, unsigned order, const BivarPoly& f);

/// Operator identity
///   e^{cλ d^m/dx^m} (f · g) = f(x + m c λ d^{m−1}/dx^{m−1}) e^{cλ d^m/dx^m} g,
/// both sides expanded to λ^order by direct operator application.
bool crofton_check(unsigned m, const BigRational& y_coef, const BivarPoly& f, const BivarPoly& g, unsigned order);

}  // namespace lacunae
