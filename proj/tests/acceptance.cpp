// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "lacunae/closed_form.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/hypergeom.hpp"
#include "lacunae/lacunary.hpp"
#include "lacunae/nieto_truax.hpp"
#include "lacunae/normal_order.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace lacunae;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts exact identities n!·[λ^n] H_{K,L} = H_{nK+L} for n in [n_lo, n_hi].
Outcome closed_form_identities(unsigned K, unsigned L, unsigned n_lo, unsigned n_hi, unsigned& count) {
  const LambdaSeries s = closed_form_HKL(K, L, n_hi);
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    ++count;
    if (!(s.egf_coeff(n) == hermite_poly(n * K + L))) {
      return {false, "K=" + std::to_string(K) + " L=" + std::to_string(L) + " n=" + std::to_string(n)};
    }
  }
  return {};
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  return {BigInt(num(rng)), BigInt(den(rng))};
}

BivarPoly random_poly(std::mt19937_64& rng, unsigned max_x, unsigned max_y, unsigned terms) {
  std::uniform_int_distribution<unsigned> xs(0, max_x);
  std::uniform_int_distribution<unsigned> ys(0, max_y);
  BivarPoly p;
  for (unsigned i = 0; i < terms; ++i) p.add_term(random_rational(rng), xs(rng), ys(rng));
  return p;
}

Outcome criterion1() {
  unsigned count = 0;
  Outcome o = closed_form_identities(3, 0, 1, 16, count);
  if (o.pass) o.detail = std::to_string(count) + " identities";
  return o;
}

Outcome criterion2() {
  unsigned count = 0;
  Outcome o = closed_form_identities(4, 0, 1, 16, count);
  if (o.pass) o = closed_form_identities(5, 0, 1, 15, count);
  if (o.pass) o.detail = std::to_string(count) + " identities";
  return o;
}

Outcome criterion3() {
  unsigned count = 0;
  for (unsigned K = 2; K <= 6; ++K) {
    for (unsigned L = 0; L <= 3; ++L) {
      Outcome o = closed_form_identities(K, L, 0, 6, count);
      if (!o.pass) return o;
    }
  }
  return {count == 140, std::to_string(count) + " identities"};
}

Outcome criterion4() {
  const CoeffTable hermite = hermite_coeff_table();
  const CoeffTable dense = random_dense_table(kSeed);
  for (unsigned K = 1; K <= 8; ++K) {
    const LambdaSeries brute = dilate_bruteforce(hermite_egf(5 * K), K, 5);
    if (!(resum_lemma1(hermite, K, 5) == brute)) return {false, "mod-K resummation K=" + std::to_string(K)};
    const SplitSeries h = resum_corollary1(hermite, K, 5);
    if (!(series_add(h.even_part, h.odd_part) == brute)) return {false, "Hermite split K=" + std::to_string(K)};
    const SplitSeries d = resum_corollary1(dense, K, 5);
    if (!(series_add(d.even_part, d.odd_part) == resum_lemma1(dense, K, 5))) {
      return {false, "dense split K=" + std::to_string(K)};
    }
  }
  return {true, "K=1..8, order 5"};
}

Outcome criterion5() {
  for (unsigned K : {3u, 4u}) {
    const BiSeries rk = rk_series(K, 3, 4);
    for (unsigned L = 1; L <= 3; ++L) {
      if (!(rk.mu_egf_coeff(L) == closed_form_HKL(K, L, 4))) {
        return {false, "K=" + std::to_string(K) + " L=" + std::to_string(L)};
      }
    }
  }
  return {true, "6 series comparisons at λ-order 4"};
}

Outcome criterion6() {
  const NormalOrderResult r = normal_order({parse_poly("2y"), BivarPoly::x()}, 8);
  LambdaSeries expected_T(8);
  expected_T.coeff_mut(0) = BivarPoly::x();
  expected_T.coeff_mut(1) = parse_poly("2y");
  if (!(r.T == expected_T)) return {false, "T != x + 2μy"};
  if (!(r.g == hermite_egf(8))) return {false, "g != e^{μx+μ²y}"};
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 50; ++i) {
    const SemiLinearOp op{random_poly(rng, 2, 1, 2), random_poly(rng, 2, 1, 2)};
    const BivarPoly f = random_poly(rng, 3, 1, 3);
    try {
      apply_exp_op(op, 5, f);
    } catch (const ConsistencyError& e) {
      return {false, "corpus pair " + std::to_string(i) + ": " + e.what()};
    }
  }
  return {true, "50 seeded pairs, order 5"};
}

Outcome criterion7() {
  std::mt19937_64 rng(kSeed + 7);
  unsigned count = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    for (int i = 0; i < 25; ++i) {
      const BivarPoly f = random_poly(rng, 4, 0, 5);
      const BivarPoly g = random_poly(rng, 4, 0, 5);
      const BigRational c = random_rational(rng);
      for (unsigned order = 0; order <= 4; ++order) {
        ++count;
        if (!crofton_check(m, c, f, g, order)) return {false, "m=" + std::to_string(m) + " pair " + std::to_string(i)};
      }
    }
  }
  return {true, std::to_string(count) + " expansions"};
}

Outcome criterion8() {
  const BigRational xs[] = {{BigInt(1), BigInt(4)}, {BigInt(1), BigInt(3)}, {BigInt(1), BigInt(2)}, 1, {BigInt(5), BigInt(4)}};
  unsigned count = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned s = 0; s <= 5; ++s) {
      for (const auto& x : xs) {
        ++count;
        if (!gmfc_check(n, s, x)) return {false, "n=" + std::to_string(n) + " s=" + std::to_string(s) + " x=" + x.str()};
      }
    }
  }
  return {true, std::to_string(count) + " cases"};
}

Outcome criterion9() {
  constexpr unsigned bits = 256;
  constexpr double rel_tol = 1e-20;
  constexpr double im_tol = 1e-30;
  const BigRational lambda(BigInt(1), BigInt(10));
  const BigRational x(1);
  const BigRational y(BigInt(1), BigInt(2));
  double worst_rel = 0;
  double worst_im = 0;
  const std::pair<unsigned, unsigned> cases[] = {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 3}};
  for (const auto& [K, L] : cases) {
    const ComplexHP r = nieto_truax(K, L, HighPrecReal(lambda, bits), HighPrecReal(x, bits), HighPrecReal(y, bits), bits);
    const HighPrecReal exact(lacunary_partial_sum(K, L, lambda, x, y, 30), bits);
    const double rel = ((r.re - exact).abs() / exact.abs()).to_double();
    const double im = r.im.abs().to_double();
    worst_rel = std::max(worst_rel, rel);
    worst_im = std::max(worst_im, im);
    if (!(rel < rel_tol) || !(im < im_tol)) {
      std::ostringstream os;
      os << "K=" << K << " L=" << L << " rel=" << rel << " im=" << im;
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << "max rel " << worst_rel << ", max |im| " << worst_im;
  return {true, os.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"K=3 closed form, n=1..16", criterion1},
      {"K=4 n=1..16 and K=5 n=1..15", criterion2},
      {"shifted sweep K=2..6, L=0..3, n=0..6", criterion3},
      {"resummation vs brute-force dilatation", criterion4},
      {"R_K mu-extraction vs shifted closed form", criterion5},
      {"normal-ordering witness", criterion6},
      {"Crofton identity", criterion7},
      {"multiplication formula", criterion8},
      {"roots-of-unity numeric check", criterion9},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%s) [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
