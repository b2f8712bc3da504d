#pragma once

#include <adnil/bigint.hpp>
#include <adnil/polynomial.hpp>

namespace adnil {

// Binomial coefficients follow the degenerate convention used throughout the
// counting formulas:
//   binomial(m, n) = m! / ((m-n)! n!)   if m >= n > 0
//                  = 1                  if n == 0 (any m, also negative)
//                  = 0                  otherwise
BigInt binomial(long long m, long long n);

/// Gaussian binomial in t under the same convention; zero polynomial in the
/// "otherwise" case.
UniPoly t_binomial(long long m, long long n);

/// F_0 = F_1 = 1, F_m = F_{m-1} + F_{m-2}.
BigInt fibonacci(int m);

/// n-th Catalan number binomial(2n, n) / (n + 1).
BigInt catalan(int n);

/// Chebyshev polynomial of the second kind,
/// U_n(x) = sum_j (-1)^j binomial(n-j, j) (2x)^(n-2j).
UniPoly chebyshev_U(int n);

}  // namespace adnil
