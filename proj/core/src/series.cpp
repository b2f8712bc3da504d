#include <adnil/series.hpp>

#include <stdexcept>

namespace adnil {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coefficients, int order) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coefficients[i]);
}

TruncatedSeries::TruncatedSeries(const UniPoly& poly, int order) : TruncatedSeries(order) {
  for (int d = 0; d <= poly.degree() && d <= order; ++d) coeffs_[static_cast<std::size_t>(d)] = poly.coeff(d);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (rhs.order() != lhs.order()) throw std::invalid_argument("series orders differ");
  const std::size_t len = lhs.coeffs_.size();
  TruncatedSeries out(lhs.order());
  for (std::size_t i = 0; i < len; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den) { return num * series_invert(den); }

TruncatedSeries series_invert(const TruncatedSeries& s) {
  const BigInt& c0 = s[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("series_invert: constant term must be +1 or -1");
  TruncatedSeries r(s.order());
  r[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (int k = 1; k <= s.order(); ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += s[i] * r[k - i];
    r[k] = -acc * c0;
  }
  return r;
}

}  // namespace adnil
