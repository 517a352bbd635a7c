#pragma once

#include "cumulants/rational.hpp"

namespace cumulants {

/// n!
BigInt factorial(unsigned n);

/// Falling factorial (x)_k = x(x-1)...(x-k+1); (x)_0 = 1.
BigInt falling_factorial(long x, unsigned k);

BigInt binomial(unsigned n, unsigned k);

/// Signed Stirling number of the first kind s(i, k), 1 <= k <= i, defined by
/// (x)_i = sum_k s(i, k) x^k. Memoized; safe to call concurrently.
BigInt stirling_first(unsigned i, unsigned k);

/// Stirling number of the second kind S(i, k), 1 <= k <= i. Memoized; safe
/// to call concurrently.
BigInt stirling_second(unsigned i, unsigned k);

/// Catalan number C_n = (2n)! / (n! (n+1)!).
BigInt catalan(unsigned n);

}  // namespace cumulants
