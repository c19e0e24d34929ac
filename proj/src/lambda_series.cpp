#include "lacunae/lambda_series.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"

#include <algorithm>

namespace lacunae {

LambdaSeries::LambdaSeries(std::vector<BivarPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

LambdaSeries LambdaSeries::constant(const BivarPoly& c, unsigned order) {
  LambdaSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

LambdaSeries LambdaSeries::monomial(const BivarPoly& c, unsigned power, unsigned order) {
  LambdaSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

bool LambdaSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BivarPoly& p) { return p.is_zero(); });
}

LambdaSeries LambdaSeries::truncated(unsigned order) const {
  std::vector<BivarPoly> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(order + 1, coeffs_.size()));
  c.resize(order + 1);
  return LambdaSeries(std::move(c));
}

BivarPoly LambdaSeries::egf_coeff(unsigned n) const { return coeff(n) * BigRational(factorial(n)); }

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

std::string LambdaSeries::pretty_str(const std::string& var) const {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (unsigned n = 0; n <= order(); ++n) {
    const BivarPoly& p = coeffs_[n];
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string body = p.pretty_str();
    if (n == 0) {
      out += body;
      continue;
    }
    out += var;
    if (n > 1) {
      std::string sup;
      for (unsigned k = n; k > 0; k /= 10) sup.insert(0, digits[k % 10]);
      out += sup;
    }
    const bool simple = p.size() == 1 && body.front() != '-';
    out += "·" + (simple ? body : "(" + body + ")");
  }
  return out.empty() ? "0" : out;
}

LambdaSeries series_add(const LambdaSeries& a, const LambdaSeries& b) {
  LambdaSeries r = a.truncated(std::min(a.order(), b.order()));
  r += b;
  return r;
}

LambdaSeries series_neg(const LambdaSeries& a) {
  std::vector<BivarPoly> c;
  c.reserve(a.coeffs().size());
  for (const auto& p : a.coeffs()) c.push_back(-p);
  return LambdaSeries(std::move(c));
}

LambdaSeries series_sub(const LambdaSeries& a, const LambdaSeries& b) { return series_add(a, series_neg(b)); }

LambdaSeries series_scale(const LambdaSeries& a, const BivarPoly& c) {
  std::vector<BivarPoly> out;
  out.reserve(a.coeffs().size());
  for (const auto& p : a.coeffs()) out.push_back(p * c);
  return LambdaSeries(std::move(out));
}

LambdaSeries series_mul(const LambdaSeries& a, const LambdaSeries& b, Exec exec) {
  const unsigned order = std::min(a.order(), b.order());
  std::vector<BivarPoly> out(order + 1);
  const long n_terms = static_cast<long>(order) + 1;
  auto cauchy_term = [&](long n) {
    BivarPoly acc;
    for (long i = 0; i <= n; ++i) {
      const auto& ai = a.coeff(static_cast<unsigned>(i));
      const auto& bj = b.coeff(static_cast<unsigned>(n - i));
      if (!ai.is_zero() && !bj.is_zero()) acc += ai * bj;
    }
    return acc;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long n = 0; n < n_terms; ++n) out[static_cast<std::size_t>(n)] = cauchy_term(n);
  } else {
    for (long n = 0; n < n_terms; ++n) out[static_cast<std::size_t>(n)] = cauchy_term(n);
  }
  return LambdaSeries(std::move(out));
}

LambdaSeries series_diff_lambda(const LambdaSeries& a, unsigned times) {
  if (times > a.order()) {
    throw TruncationUnderflow("cannot differentiate " + std::to_string(times) +
                              " times a series of order " + std::to_string(a.order()));
  }
  LambdaSeries r(a.order() - times);
  for (unsigned n = 0; n <= r.order(); ++n) {
    // (n+times)!/n!
    BigInt falling = 1;
    for (unsigned k = n + 1; k <= n + times; ++k) falling *= k;
    r.coeff_mut(n) = a.coeff(n + times) * BigRational(falling);
  }
  return r;
}

LambdaSeries series_exp_linear(const BivarPoly& c, unsigned order) {
  LambdaSeries r(order);
  BivarPoly power(1);
  for (unsigned k = 0; k <= order; ++k) {
    r.coeff_mut(k) = power * BigRational(1, factorial(k));
    power = power * c;
  }
  return r;
}

LambdaSeries compose_poly(const BivarPoly& p, const LambdaSeries& t) {
  const unsigned order = t.order();
  LambdaSeries result(order);
  if (p.is_zero()) return result;
  // Horner in x: group p by x-power (terms are sorted x-descending)
  const int deg = p.deg_x();
  std::vector<BivarPoly> by_x(static_cast<std::size_t>(deg) + 1);
  for (const auto& [m, c] : p) by_x[m.xp].add_term(c, 0, m.yp);
  result = LambdaSeries::constant(by_x[static_cast<std::size_t>(deg)], order);
  for (int k = deg - 1; k >= 0; --k) {
    result = series_mul(result, t, Exec::serial);
    result.coeff_mut(0) += by_x[static_cast<std::size_t>(k)];
  }
  return result;
}

}  // namespace lacunae
