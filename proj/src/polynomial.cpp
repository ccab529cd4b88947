#include "hsimplex/polynomial.hpp"

#include <algorithm>

#include "hsimplex/combinatorics.hpp"

namespace hsimplex {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_minus_one_pow(int m) {
  std::vector<BigInt> v(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    v[i] = binomial(m, i);
    if ((m - i) % 2) v[i] = -v[i];
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::vector<BigInt> IntPolynomial::padded(std::size_t length) const {
  std::vector<BigInt> out(std::max(length, coeffs_.size()), 0);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
  return out;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPolynomial substitute_x_minus_1(const IntPolynomial& p) {
  // Horner in the shifted variable: q = (...(a_d (x-1) + a_{d-1})(x-1) + ...).
  const IntPolynomial shift{-1, 1};
  IntPolynomial acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * shift + IntPolynomial::constant(p.coeff(i));
  return acc;
}

std::vector<BigInt> series_over_one_minus_x(const IntPolynomial& p, int e, std::size_t terms) {
  std::vector<BigInt> out(terms, 0);
  for (std::size_t i = 0; i < terms; ++i) out[i] = p.coeff(static_cast<int>(i));
  // Each division by (1 - x) is a prefix sum.
  for (int round = 0; round < e; ++round)
    for (std::size_t i = 1; i < terms; ++i) out[i] += out[i - 1];
  return out;
}

}  // namespace hsimplex
