#pragma once

#include "lacunae/rational.hpp"

namespace lacunae {

/// n!, memoized. Safe to call from concurrent threads.
const BigInt& factorial(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace lacunae
