#include "generators.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/lambda_series.hpp"

#include <doctest.h>

using namespace lacunae;
using lacunae::testing::kSeed;

TEST_CASE("BigRational stays canonical") {
  const BigRational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(BigRational(BigInt(0), BigInt(-7)).fraction_str() == "0/1");
  CHECK(BigRational::parse("-0.125") == BigRational(BigInt(-1), BigInt(8)));
  CHECK(BigRational::parse(" 10/4 ") == BigRational(BigInt(5), BigInt(2)));
  CHECK(BigRational::parse("7").str() == "7");
  CHECK_THROWS_AS(BigRational::parse("1/x"), ParseError);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DomainError);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), DomainError);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("BivarPoly stores no zero terms") {
  BivarPoly p = BivarPoly::x() + BivarPoly::y();
  p -= BivarPoly::x();
  CHECK(p.size() == 1);
  CHECK(p == BivarPoly::y());
  CHECK((p - p).is_zero());
  CHECK((p * BigRational(0)).is_zero());
}

TEST_CASE("BivarPoly text forms and parser") {
  const BivarPoly p = parse_poly("1/2 x^2 + y - 3*x*y^2");
  CHECK(p.pretty_str() == "1/2 x² - 3 x y² + y");
  CHECK(p.canonical_str() == "1/2 * x^2 * y^0 + -3/1 * x^1 * y^2 + 1/1 * x^0 * y^1");
  CHECK(parse_poly(p.canonical_str()) == p);
  CHECK(parse_poly("2y") == BivarPoly::monomial(2, 0, 1));
  CHECK(parse_poly("-x") == -BivarPoly::x());
  CHECK_THROWS_AS(parse_poly("x + "), ParseError);
  CHECK_THROWS_AS(parse_poly("x $ y"), ParseError);
  CHECK(BivarPoly().pretty_str() == "0");
}

TEST_CASE("BivarPoly derivative and substitution") {
  const BivarPoly p = parse_poly("x^3 + 6 x y");
  CHECK(p.diff_x() == parse_poly("3x^2 + 6y"));
  CHECK(p.diff_x(3) == BivarPoly(6));
  CHECK(p.diff_x(4).is_zero());
  // H_3(2x, -1)
  CHECK(p.substitute(BivarPoly::monomial(2, 1, 0), BivarPoly(-1)) == parse_poly("8x^3 - 12x"));
}

TEST_CASE("series_add") {
  const LambdaSeries b = hermite_egf(4);
  SUBCASE("zero is the identity up to the shorter order") {
    CHECK(series_add(LambdaSeries(2), b) == b.truncated(2));
  }
  SUBCASE("additive inverse") {
    const LambdaSeries a = series_exp_linear(BivarPoly::x(), 2);
    CHECK(series_add(a, series_neg(a)).is_zero());
    CHECK(series_add(a, series_neg(a)).order() == 2);
  }
  SUBCASE("disjoint supports") {
    const LambdaSeries l1 = LambdaSeries::monomial(BivarPoly(1), 1, 3);
    const LambdaSeries l2 = LambdaSeries::monomial(BivarPoly(1), 2, 3);
    const LambdaSeries sum = series_add(l1, l2);
    CHECK(sum.coeff(1) == BivarPoly(1));
    CHECK(sum.coeff(2) == BivarPoly(1));
    CHECK(sum.coeff(0).is_zero());
    CHECK(sum.coeff(3).is_zero());
  }
}

TEST_CASE("series_mul") {
  const LambdaSeries b = hermite_egf(5);
  CHECK(series_mul(LambdaSeries::constant(BivarPoly(1), 5), b) == b);

  // e^λ · e^λ = e^{2λ}
  const LambdaSeries e = series_exp_linear(BivarPoly(1), 4);
  LambdaSeries expected(4);
  for (unsigned k = 0; k <= 4; ++k) expected.coeff_mut(k) = BivarPoly(BigRational(BigInt(1) << k, factorial(k)));
  CHECK(series_mul(e, e) == expected);

  LambdaSeries one_plus(2);
  one_plus.coeff_mut(0) = BivarPoly(1);
  one_plus.coeff_mut(1) = BivarPoly(1);
  LambdaSeries one_minus(2);
  one_minus.coeff_mut(0) = BivarPoly(1);
  one_minus.coeff_mut(1) = BivarPoly(-1);
  const LambdaSeries prod = series_mul(one_plus, one_minus);
  CHECK(prod.coeff(0) == BivarPoly(1));
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(2) == BivarPoly(-1));

  CHECK(series_mul(LambdaSeries(3), LambdaSeries(5)).order() == 3);
}

TEST_CASE("series_diff_lambda") {
  const LambdaSeries a = hermite_egf(5);
  CHECK(series_diff_lambda(a, 0) == a);

  const LambdaSeries cube = LambdaSeries::monomial(BivarPoly(1), 3, 3);
  const LambdaSeries d2 = series_diff_lambda(cube, 2);
  CHECK(d2.order() == 1);
  CHECK(d2.coeff(1) == BivarPoly(6));
  CHECK(d2.coeff(0).is_zero());

  CHECK(series_diff_lambda(a, 1).coeff(0) == hermite_poly(1));
  CHECK_THROWS_AS(series_diff_lambda(a, 6), TruncationUnderflow);
}

TEST_CASE("property: ring axioms on random series") {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_series(rng, 4);
    const auto b = testing::random_series(rng, 4);
    const auto c = testing::random_series(rng, 4);
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_add(series_add(a, b), c) == series_add(a, series_add(b, c)));
  }
}

TEST_CASE("property: polynomial ring axioms and evaluation homomorphism") {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_poly(rng);
    const auto q = testing::random_poly(rng);
    const auto r = testing::random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    const BigRational x = testing::small_rational(rng);
    const BigRational y = testing::small_rational(rng);
    CHECK((p + q).evaluate(x, y) == p.evaluate(x, y) + q.evaluate(x, y));
    CHECK((p * q).evaluate(x, y) == p.evaluate(x, y) * q.evaluate(x, y));
  }
}

TEST_CASE("property: differentiation rescales coefficients by falling factorials") {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::random_series(rng, 6);
    for (unsigned L = 0; L <= a.order(); ++L) {
      const auto d = series_diff_lambda(a, L);
      for (unsigned n = 0; n + L <= a.order(); ++n) {
        CHECK(d.coeff(n) * BigRational(factorial(n)) == a.coeff(n + L) * BigRational(factorial(n + L)));
      }
    }
  }
}

TEST_CASE("compose_poly evaluates a polynomial at a series") {
  // (x)^2 at T = x + λ: x² + 2xλ + λ²
  LambdaSeries t(3);
  t.coeff_mut(0) = BivarPoly::x();
  t.coeff_mut(1) = BivarPoly(1);
  const LambdaSeries sq = compose_poly(parse_poly("x^2 + y"), t);
  CHECK(sq.coeff(0) == parse_poly("x^2 + y"));
  CHECK(sq.coeff(1) == parse_poly("2x"));
  CHECK(sq.coeff(2) == BivarPoly(1));
  CHECK(sq.coeff(3).is_zero());
}

TEST_CASE("series pretty printing") {
  CHECK(hermite_egf(2).pretty_str() == "1 + λ·x + λ²·(1/2 x² + y)");
  CHECK(LambdaSeries(3).pretty_str() == "0");
}
