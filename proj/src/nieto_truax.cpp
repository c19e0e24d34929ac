#include "lacunae/nieto_truax.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace lacunae {

HighPrecReal::HighPrecReal(unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(v_, 1);
}

HighPrecReal::HighPrecReal(const BigRational& r, unsigned bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_q(v_, r.get().get_mpq_t(), MPFR_RNDN);
}

HighPrecReal::HighPrecReal(const HighPrecReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

HighPrecReal::HighPrecReal(HighPrecReal&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

HighPrecReal& HighPrecReal::operator=(const HighPrecReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

HighPrecReal& HighPrecReal::operator=(HighPrecReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

HighPrecReal::~HighPrecReal() { mpfr_clear(v_); }

HighPrecReal HighPrecReal::parse(const std::string& text, unsigned bits) {
  if (text.find('/') != std::string::npos) return {BigRational::parse(text), bits};
  HighPrecReal r(bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("malformed real number: '" + text + "'");
  }
  return r;
}

HighPrecReal HighPrecReal::pi(unsigned bits) {
  HighPrecReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

namespace {

unsigned result_bits(const HighPrecReal& a, const HighPrecReal& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

HighPrecReal operator+(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal r(result_bits(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighPrecReal operator-(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal r(result_bits(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighPrecReal operator*(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal r(result_bits(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighPrecReal operator/(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal r(result_bits(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighPrecReal HighPrecReal::abs() const {
  HighPrecReal r(bits());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

HighPrecReal HighPrecReal::exp() const {
  HighPrecReal r(bits());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

HighPrecReal HighPrecReal::cos() const {
  HighPrecReal r(bits());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

HighPrecReal HighPrecReal::sin() const {
  HighPrecReal r(bits());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

HighPrecReal HighPrecReal::pow2(long e, unsigned bits) {
  HighPrecReal r(bits);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string HighPrecReal::str(int digits) const {
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN),
                                          mpfr_free_str);
  if (!s) return "nan";
  std::string m = s.get();
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return m;
  const bool neg = m[0] == '-';
  if (neg) m.erase(0, 1);
  std::string out = (neg ? "-" : "") + m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exp10 - 1);
  return out;
}

namespace {

struct Cx {
  HighPrecReal re;
  HighPrecReal im;
};

Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Cx cexp(const Cx& z) {
  const HighPrecReal m = z.re.exp();
  return {m * z.im.cos(), m * z.im.sin()};
}

}  // namespace

ComplexHP nieto_truax(unsigned K, unsigned L, const HighPrecReal& lambda, const HighPrecReal& x,
                      const HighPrecReal& y, unsigned precision_bits) {
  if (K < 1) throw DomainError("K must be at least 1");
  if (L >= K) throw DomainError("roots-of-unity formula needs L < K");
  if (precision_bits < 64) throw DomainError("precision must be at least 64 bits");
  const unsigned bits = precision_bits;
  const HighPrecReal lam(lambda);
  const HighPrecReal two_pi = HighPrecReal::pi(bits) * HighPrecReal(BigRational(2), bits);
  const HighPrecReal kk(BigRational(static_cast<long>(K)), bits);
  Cx sum{HighPrecReal(bits), HighPrecReal(bits)};
  for (unsigned l = 1; l <= K; ++l) {
    const HighPrecReal angle = two_pi * HighPrecReal(BigRational(static_cast<long>(l)), bits) / kk;
    const Cx tau{lam * angle.cos(), lam * angle.sin()};
    const Cx tau2 = mul(tau, tau);
    // x τ + y τ² − 2πiℓL/K
    const HighPrecReal phase = angle * HighPrecReal(BigRational(static_cast<long>(L)), bits);
    const Cx expo{x * tau.re + y * tau2.re, x * tau.im + y * tau2.im - phase};
    const Cx term = cexp(expo);
    sum.re = sum.re + term.re;
    sum.im = sum.im + term.im;
  }
  return {sum.re / kk, sum.im / kk};
}

BigRational lacunary_partial_sum(unsigned K, unsigned L, const BigRational& lambda, const BigRational& x,
                                 const BigRational& y, unsigned n_max) {
  BigRational sum = 0;
  for (unsigned n = 0; n <= n_max; ++n) {
    const unsigned idx = n * K + L;
    sum += lambda.pow(idx) * hermite_poly(idx).evaluate(x, y) / BigRational(factorial(idx));
  }
  return sum;
}

}  // namespace lacunae
