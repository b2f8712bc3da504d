#include <adnil/determinant.hpp>

#include <stdexcept>
#include <utility>

namespace adnil {

BigInt det_exact(const BigMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("det_exact: empty matrix");
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("det_exact: matrix is not square");

  BigMatrix m = matrix;
  BigInt sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace adnil
