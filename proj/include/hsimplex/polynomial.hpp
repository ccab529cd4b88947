#pragma once

#include <string>
#include <vector>

#include "hsimplex/bigint.hpp"

namespace hsimplex {

/// Dense integer polynomial, coefficient i multiplies x^i.
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);
  /// (x - 1)^m
  static IntPolynomial x_minus_one_pow(int m);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  BigInt coeff(int i) const;
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Coefficients low degree first, padded with zeros to `length` entries.
  std::vector<BigInt> padded(std::size_t length) const;
  std::string to_string() const;  // e.g. "x^2 - 2x + 1"

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// q(x) = p(x - 1), expanded exactly.
IntPolynomial substitute_x_minus_1(const IntPolynomial& p);

/// Power series coefficients 0..terms-1 of p(x) / (1 - x)^e.
std::vector<BigInt> series_over_one_minus_x(const IntPolynomial& p, int e, std::size_t terms);

}  // namespace hsimplex
