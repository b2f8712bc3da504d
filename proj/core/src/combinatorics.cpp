#include <adnil/combinatorics.hpp>

#include <stdexcept>
#include <vector>

namespace adnil {

BigInt binomial(long long m, long long n) {
  if (n == 0) return 1;
  if (!(m >= n && n > 0)) return 0;
  const long long k = std::min(n, m - n);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result;
}

UniPoly t_binomial(long long m, long long n) {
  if (n == 0) return UniPoly::constant(1);
  if (!(m >= n && n > 0)) return {};
  // q-Pascal: [a, b] = [a-1, b-1] + t^b [a-1, b], one row at a time.
  std::vector<UniPoly> row{UniPoly::constant(1)};
  for (long long a = 1; a <= m; ++a) {
    const long long width = std::min(a, n);
    std::vector<UniPoly> next(static_cast<std::size_t>(width) + 1);
    next[0] = UniPoly::constant(1);
    for (long long b = 1; b <= width; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      if (ub - 1 < row.size()) next[ub] += row[ub - 1];
      if (ub < row.size()) next[ub] += row[ub].shifted(static_cast<int>(b));
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

BigInt fibonacci(int m) {
  if (m < 0) throw std::invalid_argument("fibonacci: index must be non-negative");
  BigInt a = 1, b = 1;
  for (int i = 1; i < m; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: index must be non-negative");
  return binomial(2LL * n, n) / (n + 1);
}

UniPoly chebyshev_U(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_U: degree must be non-negative");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; 2 * j <= n; ++j) {
    BigInt term = binomial(n - j, j) << (n - 2 * j);
    c[static_cast<std::size_t>(n - 2 * j)] = (j % 2 == 0) ? term : BigInt(-term);
  }
  return UniPoly(std::move(c));
}

}  // namespace adnil
