#pragma once

#include <adnil/bigint.hpp>
#include <adnil/polynomial.hpp>

#include <span>
#include <vector>

namespace adnil {

/// Formal power series known exactly through x^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(std::vector<BigInt> coefficients, int order);
  TruncatedSeries(const UniPoly& poly, int order);

  static TruncatedSeries one(int order);
  static TruncatedSeries x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  BigInt& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const BigInt> coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Multiplicative inverse modulo x^(order+1).
/// Throws std::domain_error unless the constant term is +1 or -1, which keeps
/// the inverse integral.
TruncatedSeries series_invert(const TruncatedSeries& s);

}  // namespace adnil
