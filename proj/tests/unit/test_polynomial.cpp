#include <doctest.h>

#include "hsimplex/polynomial.hpp"

using namespace hsimplex;

TEST_CASE("polynomial arithmetic") {
  IntPolynomial p{1, 2};  // 1 + 2x
  IntPolynomial q{-1, 0, 1};
  CHECK((p * q) == IntPolynomial{-1, -2, 1, 2});
  CHECK((p + q) == IntPolynomial{0, 2, 1});
  CHECK((q - q).is_zero());
  CHECK((q - q).degree() == -1);
  CHECK(IntPolynomial{1, 0, 0}.degree() == 0);
  CHECK(q.evaluate(3) == 8);
  CHECK(IntPolynomial::x_minus_one_pow(2) == IntPolynomial{1, -2, 1});
  CHECK(IntPolynomial::x_minus_one_pow(2).to_string() == "x^2 - 2x + 1");
  CHECK(IntPolynomial::monomial(3, 2).padded(4) == std::vector<BigInt>{0, 0, 3, 0});
}

TEST_CASE("substituting x - 1") {
  // x^3 + 3x  ->  (x-1)^3 + 3(x-1)
  CHECK(substitute_x_minus_1(IntPolynomial{0, 3, 0, 1}) == IntPolynomial{-4, 6, -3, 1});
  for (long c = -3; c <= 3; ++c) {
    IntPolynomial p{c, 2, -c, 5};
    CHECK(substitute_x_minus_1(p).evaluate(7) == p.evaluate(6));
  }
}

TEST_CASE("series of p / (1-x)^e") {
  CHECK(series_over_one_minus_x(IntPolynomial{1}, 1, 4) == std::vector<BigInt>{1, 1, 1, 1});
  CHECK(series_over_one_minus_x(IntPolynomial{1}, 2, 4) == std::vector<BigInt>{1, 2, 3, 4});
  // (1 + 4x + x^2) / (1-x)^2 is the hexagonal coordination sequence
  CHECK(series_over_one_minus_x(IntPolynomial{1, 4, 1}, 2, 4) == std::vector<BigInt>{1, 6, 12, 18});
}
