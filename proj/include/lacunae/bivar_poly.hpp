#pragma once

#include "lacunae/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace lacunae {

struct Monomial {
  unsigned xp = 0;
  unsigned yp = 0;
  friend bool operator==(Monomial, Monomial) = default;
};

/// Canonical term order: x-power descending, then y-power ascending.
struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const {
    return a.xp != b.xp ? a.xp > b.xp : a.yp < b.yp;
  }
};

struct Term {
  Monomial mono;
  BigRational coef;
};

/// Sparse exact polynomial in x and y. Zero coefficients are never stored.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, BigRational, MonomialOrder>;

  BivarPoly() = default;
  BivarPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)

  static BivarPoly monomial(const BigRational& c, unsigned xp, unsigned yp);
  static BivarPoly x() { return monomial(1, 1, 0); }
  static BivarPoly y() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  BigRational coeff(unsigned xp, unsigned yp) const;
  void add_term(const BigRational& c, unsigned xp, unsigned yp);

  /// Highest x-power; -1 for the zero polynomial.
  int deg_x() const;
  int deg_y() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BigRational& c);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const BigRational& c) { return a *= c; }
  friend BivarPoly operator*(const BigRational& c, BivarPoly a) { return a *= c; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const;
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by x^dx y^dy.
  BivarPoly shifted(unsigned dx, unsigned dy) const;
  BivarPoly pow(unsigned e) const;

  /// k-th derivative in x.
  BivarPoly diff_x(unsigned k = 1) const;

  BigRational evaluate(const BigRational& x, const BigRational& y) const;
  /// p(x_sub, y_sub).
  BivarPoly substitute(const BivarPoly& x_sub, const BivarPoly& y_sub) const;

  /// `c * x^a * y^b` terms joined with " + "; "0" for the zero polynomial.
  std::string canonical_str() const;
  /// Human-readable form, e.g. "1/2 x² + y".
  std::string pretty_str() const;

 private:
  TermMap terms_;
};

/// First term (in canonical order) where a and b differ, reported as the
/// coefficient of a - b.
std::optional<Term> first_difference(const BivarPoly& a, const BivarPoly& b);

/// Parses sums of products of rationals, x, y, x^a, y^b, e.g. "2*y + x^2 - 1/3 x y".
BivarPoly parse_poly(std::string_view text);

}  // namespace lacunae
