#include "generators.hpp"
#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hypergeom.hpp"

#include <doctest.h>

using namespace lacunae;

namespace {
BigRational q(long n, long d) { return {BigInt(n), BigInt(d)}; }
}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(q(7, 3), 0) == BigRational(1));
  CHECK(pochhammer(q(1, 2), 2) == q(3, 4));
  for (unsigned n = 0; n < 12; ++n) CHECK(pochhammer(1, n) == BigRational(factorial(n)));
  CHECK(pochhammer(-2, 3) == BigRational(0));
}

TEST_CASE("property: pochhammer step") {
  std::mt19937_64 rng(testing::kSeed);
  for (int i = 0; i < 200; ++i) {
    const BigRational a = testing::small_rational(rng);
    const unsigned b = static_cast<unsigned>(rng() % 10);
    CHECK(pochhammer(a, b + 1) == pochhammer(a, b) * (a + BigRational(static_cast<long>(b))));
  }
}

TEST_CASE("0F0 is the exponential") {
  const HypergeomSpec spec{{}, {}, MonomialArg{1, 1, 0, 0}};
  const LambdaSeries s = pfq_series(spec, 8);
  for (unsigned n = 0; n <= 8; ++n) CHECK(s.coeff(n) == BivarPoly(BigRational(1, factorial(n))));
}

TEST_CASE("2F1(1,1;1) is the geometric series") {
  const HypergeomSpec spec{{1, 1}, {1}, MonomialArg{1, 1, 0, 0}};
  const LambdaSeries s = pfq_series(spec, 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(s.coeff(n) == BivarPoly(1));
}

TEST_CASE("3F1 block of the K = 4 closed form") {
  const HypergeomSpec spec{{q(1, 4), q(1, 2), q(3, 4)}, {q(1, 2)}, MonomialArg{64, 1, 0, 2}};
  CHECK(pfq_term(spec, 1) == BigRational(12));
  CHECK(pfq_series(spec, 3).coeff(1) == parse_poly("12 y^2"));
}

TEST_CASE("argument monomial lands on the right powers") {
  const HypergeomSpec spec{{}, {}, MonomialArg{3, 2, 1, 1}};
  const LambdaSeries s = pfq_series(spec, 5);
  CHECK(s.coeff(1).is_zero());
  CHECK(s.coeff(2) == parse_poly("3 x y"));
  CHECK(s.coeff(4) == parse_poly("9/2 x^2 y^2"));
  CHECK(s.coeff(5).is_zero());
}

TEST_CASE("pole and domain errors") {
  const HypergeomSpec pole{{1}, {-2}, MonomialArg{1, 1, 0, 0}};
  CHECK_NOTHROW(pfq_series(pole, 2));
  CHECK_THROWS_AS(pfq_series(pole, 3), PoleError);
  CHECK_THROWS_AS(pfq_term(pole, 5), PoleError);
  const HypergeomSpec flat{{}, {}, MonomialArg{1, 0, 0, 0}};
  CHECK_THROWS_AS(pfq_series(flat, 3), DomainError);
}

TEST_CASE("property: consecutive term ratio") {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int i = 0; i < 40; ++i) {
    HypergeomSpec spec;
    const unsigned p = static_cast<unsigned>(rng() % 4);
    const unsigned r = static_cast<unsigned>(rng() % 3);
    for (unsigned k = 0; k < p; ++k) spec.upper.push_back(q(static_cast<long>(rng() % 9 + 1), static_cast<long>(rng() % 5 + 1)));
    for (unsigned k = 0; k < r; ++k) spec.lower.push_back(q(static_cast<long>(rng() % 9 + 1), static_cast<long>(rng() % 5 + 1)));
    spec.arg.coef = testing::small_rational(rng);
    if (spec.arg.coef.is_zero()) spec.arg.coef = 1;
    for (unsigned s = 0; s < 8; ++s) {
      BigRational ratio = spec.arg.coef / BigRational(static_cast<long>(s + 1));
      for (const auto& a : spec.upper) ratio *= a + BigRational(static_cast<long>(s));
      for (const auto& b : spec.lower) ratio /= b + BigRational(static_cast<long>(s));
      CHECK(pfq_term(spec, s + 1) == pfq_term(spec, s) * ratio);
    }
  }
}

TEST_CASE("multiplication formula") {
  CHECK(gmfc_check(3, 0, q(2, 7)));
  CHECK(gmfc_check(2, 1, q(1, 2)));
  // (4(s+q))! = 4^{4q} (4s)! (s+q)!/q! Π_j (s + (j+1)/4)_q at s = q = 1
  BigRational rhs = BigRational(4).pow(4) * BigRational(factorial(4)) * BigRational(factorial(2));
  for (long j = 0; j < 3; ++j) rhs *= pochhammer(BigRational(1) + q(j + 1, 4), 1);
  CHECK(rhs == BigRational(40320));
  CHECK(BigRational(factorial(8)) == BigRational(40320));

  const BigRational xs[] = {q(1, 4), q(1, 3), q(1, 2), 1, q(5, 4)};
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned s = 0; s <= 5; ++s) {
      for (const auto& x : xs) CHECK(gmfc_check(n, s, x));
    }
  }
  CHECK_THROWS_AS(gmfc_check(1, 2, 1), DomainError);
  CHECK_THROWS_AS(gmfc_check(2, 2, 0), DomainError);
}
