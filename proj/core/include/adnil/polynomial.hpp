#pragma once

#include <adnil/bigint.hpp>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace adnil {

/// Dense univariate polynomial over BigInt, indexed by degree.
///
/// The coefficient vector never carries a trailing zero, so the zero
/// polynomial is the empty vector and reports degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coefficients);

  static UniPoly constant(BigInt value);
  static UniPoly monomial(BigInt value, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^d; zero outside [0, degree()].
  const BigInt& coeff(int d) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  /// Multiply by var^k.
  UniPoly shifted(int k) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Human-readable form in ascending degree, e.g. "1 + 2t + t^2".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Sparse polynomial in q and t with BigInt coefficients, keyed by
/// (q-degree, t-degree). Zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (q degree, t degree)

  BiPoly() = default;

  void add_term(int q_degree, int t_degree, const BigInt& coefficient);
  /// Adds q^q_degree * t^t_shift * poly(t).
  void add_scaled(int q_degree, int t_shift, const UniPoly& poly_in_t);

  BigInt coeff(int q_degree, int t_degree) const;
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of q^k as a polynomial in t.
  UniPoly q_coefficient(int k) const;
  /// Specialisation q = 1, a polynomial in t.
  UniPoly at_q_one() const;
  /// Specialisation t = 1, a polynomial in q.
  UniPoly at_t_one() const;
  BigInt at_one() const;

  BiPoly& operator+=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Terms in ascending (q, t) order, e.g. "1 + qt + 2qt^2 + q^2t^3".
  std::string to_string() const;

 private:
  std::map<Key, BigInt> terms_;
};

}  // namespace adnil
