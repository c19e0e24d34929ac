#include "lacunae/combinatorics.hpp"
#include "lacunae/hermite.hpp"

#include <doctest.h>

using namespace lacunae;

TEST_CASE("hermite_poly small cases") {
  CHECK(hermite_poly(0) == BivarPoly(1));
  CHECK(hermite_poly(2) == parse_poly("x^2 + 2y"));
  CHECK(hermite_poly(3) == parse_poly("x^3 + 6x y"));
  // classical H_3(x) = H_3(2x, -1)
  CHECK(hermite_poly(3).substitute(BivarPoly::monomial(2, 1, 0), BivarPoly(-1)) == parse_poly("8x^3 - 12x"));
}

TEST_CASE("classical Hermite polynomials via H_n(2x,-1)") {
  // physicists' recurrence H_{n+1} = 2x H_n - 2n H_{n-1}
  BivarPoly prev(1);
  BivarPoly cur = BivarPoly::monomial(2, 1, 0);
  for (unsigned n = 1; n < 15; ++n) {
    CHECK(hermite_poly(n).substitute(BivarPoly::monomial(2, 1, 0), BivarPoly(-1)) == cur);
    BivarPoly next = cur.shifted(1, 0) * BigRational(2) - prev * BigRational(2L * n);
    prev = cur;
    cur = next;
  }
}

TEST_CASE("hermite_poly recurrence, degree and y=0 specialization") {
  for (unsigned n = 1; n < 40; ++n) {
    const BivarPoly rhs = hermite_poly(n).shifted(1, 0) + hermite_poly(n - 1).shifted(0, 1) * BigRational(2L * n);
    CHECK(hermite_poly(n + 1) == rhs);
  }
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(hermite_poly(n).deg_x() == static_cast<int>(n));
    CHECK(hermite_poly(n).substitute(BivarPoly::x(), BivarPoly()) == BivarPoly::monomial(1, n, 0));
  }
}

TEST_CASE("hermite_egf") {
  const LambdaSeries egf = hermite_egf(10);
  CHECK(egf.coeff(0) == BivarPoly(1));
  CHECK(egf.egf_coeff(2) == parse_poly("x^2 + 2y"));
  // e^{λx} · e^{λ²y}
  const LambdaSeries ex = series_exp_linear(BivarPoly::x(), 10);
  LambdaSeries ey(10);
  for (unsigned k = 0; 2 * k <= 10; ++k) ey.coeff_mut(2 * k) = BivarPoly::monomial(BigRational(1, factorial(k)), 0, k);
  CHECK(series_mul(ex, ey) == egf);
}

TEST_CASE("hermite_coeff_table") {
  const CoeffTable table = hermite_coeff_table();
  CHECK(table(3, 1).is_zero());
  CHECK(table(0, 2) == parse_poly("2y"));
  CHECK(table(2, 4) == parse_poly("180 y^2"));
  CHECK(table.support().modulus == 2);
  for (unsigned r = 0; r < 8; ++r) {
    for (unsigned m = 0; m < 8; ++m) {
      if (m % 2) {
        CHECK(table(r, m).is_zero());
      } else {
        CHECK(table(r, m) == BivarPoly::monomial(BigRational(factorial(r + m)) / BigRational(BigInt(factorial(r) * factorial(m / 2))), 0, m / 2));
      }
    }
  }
}

TEST_CASE("coefficient table reconstructs the generating function") {
  const CoeffTable table = hermite_coeff_table();
  for (unsigned N = 0; N <= 20; ++N) CHECK(table.egf(N) == hermite_egf(N));
}
