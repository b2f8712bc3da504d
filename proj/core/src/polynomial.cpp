#include <adnil/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace adnil {
namespace {

const BigInt kZero = 0;

// Appends "c*var^d" in the compact style "2t^3", "t", "-t^2", "5".
void append_monomial(std::ostringstream& out, const BigInt& c, std::string_view vars, bool first) {
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (!first) {
    out << (c < 0 ? " - " : " + ");
  } else if (c < 0) {
    out << '-';
  }
  if (mag != 1 || vars.empty()) out << mag;
  out << vars;
}

std::string power(char var, int d) {
  if (d == 0) return {};
  std::string s(1, var);
  if (d > 1) s += '^' + std::to_string(d);
  return s;
}

}  // namespace

UniPoly::UniPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

UniPoly UniPoly::constant(BigInt value) { return UniPoly(std::vector<BigInt>{std::move(value)}); }

UniPoly UniPoly::monomial(BigInt value, int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(value);
  return UniPoly(std::move(c));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& UniPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(d)];
}

BigInt UniPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    append_monomial(out, c, power(var, d), first);
    first = false;
  }
  return out.str();
}

void BiPoly::add_term(int q_degree, int t_degree, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_degree, t_degree}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void BiPoly::add_scaled(int q_degree, int t_shift, const UniPoly& poly_in_t) {
  for (int d = 0; d <= poly_in_t.degree(); ++d) add_term(q_degree, t_shift + d, poly_in_t.coeff(d));
}

BigInt BiPoly::coeff(int q_degree, int t_degree) const {
  auto it = terms_.find({q_degree, t_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

UniPoly BiPoly::q_coefficient(int k) const {
  UniPoly out;
  for (const auto& [key, c] : terms_)
    if (key.first == k) out += UniPoly::monomial(c, key.second);
  return out;
}

UniPoly BiPoly::at_q_one() const {
  UniPoly out;
  for (const auto& [key, c] : terms_) out += UniPoly::monomial(c, key.second);
  return out;
}

UniPoly BiPoly::at_t_one() const {
  UniPoly out;
  for (const auto& [key, c] : terms_) out += UniPoly::monomial(c, key.first);
  return out;
}

BigInt BiPoly::at_one() const {
  BigInt total = 0;
  for (const auto& [key, c] : terms_) total += c;
  return total;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [a, ca] : lhs.terms_)
    for (const auto& [b, cb] : rhs.terms_) out.add_term(a.first + b.first, a.second + b.second, ca * cb);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_monomial(out, c, power('q', key.first) + power('t', key.second), first);
    first = false;
  }
  return out.str();
}

}  // namespace adnil
