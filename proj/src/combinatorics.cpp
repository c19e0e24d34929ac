#include "lacunae/combinatorics.hpp"

#include <deque>
#include <mutex>

namespace lacunae {

const BigInt& factorial(unsigned n) {
  // deque growth keeps references to existing elements valid
  static std::deque<BigInt> cache{BigInt(1)};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (cache.size() <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace lacunae
