#pragma once

#include <adnil/bigint.hpp>

#include <vector>

namespace adnil {

using BigMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free (Bareiss) elimination; every division
/// performed is exact. Throws std::invalid_argument for an empty or
/// non-square matrix.
BigInt det_exact(const BigMatrix& matrix);

}  // namespace adnil
