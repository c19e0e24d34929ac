#include "generators.hpp"
#include "lacunae/closed_form.hpp"
#include "lacunae/lacunary.hpp"
#include "lacunae/verify.hpp"

#include <doctest.h>

using namespace lacunae;

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(testing::kSeed);
  const LambdaSeries a = testing::random_series(rng, 12);
  const LambdaSeries b = testing::random_series(rng, 12);
  CHECK(series_mul(a, b, Exec::serial) == series_mul(a, b, Exec::parallel));

  for (unsigned K = 2; K <= 7; ++K) {
    CHECK(closed_form_HKL(K, 2, 5, Exec::serial) == closed_form_HKL(K, 2, 5, Exec::parallel));
    const CoeffTable dense = random_dense_table(K);
    CHECK(resum_lemma1(dense, K, 5, Exec::serial) == resum_lemma1(dense, K, 5, Exec::parallel));
  }
  CHECK(rk_series(3, 2, 3, Exec::serial).by_mu == rk_series(3, 2, 3, Exec::parallel).by_mu);

  VerifyConfig cfg;
  cfg.k_range = {2, 5};
  cfg.l_range = {0, 1};
  cfg.n_max = 5;
  const auto s = without_timing(run_verification(cfg, Exec::serial));
  const auto p = without_timing(run_verification(cfg, Exec::parallel));
  CHECK(s.cases == p.cases);
  CHECK(s.checks == p.checks);
  CHECK(max_threads() >= 1);
}
