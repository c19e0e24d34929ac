#pragma once

#include "lacunae/rational.hpp"

#include <mpfr.h>

#include <string>

namespace lacunae {

/// Owning MPFR real with its own precision.
class HighPrecReal {
 public:
  explicit HighPrecReal(unsigned bits);
  HighPrecReal(const BigRational& r, unsigned bits);
  HighPrecReal(const HighPrecReal& o);
  HighPrecReal(HighPrecReal&& o) noexcept;
  HighPrecReal& operator=(const HighPrecReal& o);
  HighPrecReal& operator=(HighPrecReal&& o) noexcept;
  ~HighPrecReal();

  /// Parses a decimal or "p/q" string at the given precision.
  static HighPrecReal parse(const std::string& text, unsigned bits);
  static HighPrecReal pi(unsigned bits);

  unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend HighPrecReal operator+(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator-(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator*(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator/(const HighPrecReal& a, const HighPrecReal& b);
  friend bool operator<(const HighPrecReal& a, const HighPrecReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  HighPrecReal abs() const;
  HighPrecReal exp() const;
  HighPrecReal cos() const;
  HighPrecReal sin() const;
  /// 2^e at this value's precision.
  static HighPrecReal pow2(long e, unsigned bits);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 40) const;

 private:
  mpfr_t v_;
};

struct ComplexHP {
  HighPrecReal re;
  HighPrecReal im;
};

/// (1/K) Σ_{ℓ=1}^{K} e^{xτ_ℓ + yτ_ℓ²} e^{−2πiℓL/K}, τ_ℓ = λ e^{2πiℓ/K}.
/// Needs 0 ≤ L < K and at least 64 bits of precision.
ComplexHP nieto_truax(unsigned K, unsigned L, const HighPrecReal& lambda, const HighPrecReal& x,
                      const HighPrecReal& y, unsigned precision_bits);

/// Exact Σ_{n=0}^{n_max} λ^{nK+L} H_{nK+L}(x,y) / (nK+L)!.
BigRational lacunary_partial_sum(unsigned K, unsigned L, const BigRational& lambda, const BigRational& x,
                                 const BigRational& y, unsigned n_max);

}  // namespace lacunae
