#pragma once

#include "lacunae/bivar_poly.hpp"
#include "lacunae/exec.hpp"

#include <string>
#include <vector>

namespace lacunae {

/// Truncated formal power series in one formal variable (λ, or μ in the
/// normal-ordering code) with BivarPoly coefficients. `order` is inclusive:
/// coefficients of λ^0..λ^order are held and exact; everything above is
/// silently dropped by every operation.
class LambdaSeries {
 public:
  explicit LambdaSeries(unsigned order = 0) : coeffs_(order + 1) {}
  explicit LambdaSeries(std::vector<BivarPoly> coeffs);

  static LambdaSeries constant(const BivarPoly& c, unsigned order);
  /// c · λ^power (zero if power > order).
  static LambdaSeries monomial(const BivarPoly& c, unsigned power, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const BivarPoly& coeff(unsigned n) const { return coeffs_.at(n); }
  BivarPoly& coeff_mut(unsigned n) { return coeffs_.at(n); }
  const std::vector<BivarPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  LambdaSeries truncated(unsigned order) const;
  /// n! · [λ^n]
  BivarPoly egf_coeff(unsigned n) const;

  LambdaSeries& operator+=(const LambdaSeries& o);
  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string pretty_str(const std::string& var = "λ") const;

 private:
  std::vector<BivarPoly> coeffs_;
};

/// Result order is min of the operand orders.
LambdaSeries series_add(const LambdaSeries& a, const LambdaSeries& b);
LambdaSeries series_sub(const LambdaSeries& a, const LambdaSeries& b);
LambdaSeries series_neg(const LambdaSeries& a);
LambdaSeries series_scale(const LambdaSeries& a, const BivarPoly& c);
/// Cauchy product truncated at min order.
LambdaSeries series_mul(const LambdaSeries& a, const LambdaSeries& b, Exec exec = Exec::parallel);
/// (d/dλ)^times; order drops by `times`. Throws TruncationUnderflow when
/// times > order(a).
LambdaSeries series_diff_lambda(const LambdaSeries& a, unsigned times);
/// Truncated exponential Σ_k λ^k c^k / k! of a polynomial c.
LambdaSeries series_exp_linear(const BivarPoly& c, unsigned order);

/// Applies a polynomial p(x, y) to a series in x's place: p(T, y).
LambdaSeries compose_poly(const BivarPoly& p, const LambdaSeries& t);

}  // namespace lacunae
