#include <doctest.h>

#include "hsimplex/face_lattice.hpp"
#include "hsimplex/toric_h.hpp"

using namespace hsimplex;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("small Eulerian posets") {
  CHECK(toric_h_poly(EulerianPoset({0}, {})) == IntPolynomial{1});
  const EulerianPoset segment({0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(toric_h_poly(segment) == IntPolynomial{1, 1});
  CHECK_THROWS_AS(toric_h_poly(EulerianPoset({0, 1, 2}, {{0, 1}, {1, 2}})), NotEulerian);

  const auto cube = dualize(hypersimplex_face_poset(2, 4));
  EulerianPoset::Element facet = 0;
  while (cube.rank(facet) != 3) ++facet;
  const auto square = lower_interval(cube, facet);
  REQUIRE(square.rank() == 3);
  CHECK(toric_h_vector(square).entries == bigs({1, 2, 1}));
  CHECK(toric_g_poly(square) == IntPolynomial{1, 1});
}

TEST_CASE("g from h") {
  CHECK(g_from_h(IntPolynomial{1, 2, 1}, 3) == IntPolynomial{1, 1});
  CHECK(g_from_h(IntPolynomial{1, 7, 22, 22, 7, 1}, 6) == IntPolynomial{1, 6, 15});
}

TEST_CASE("simplicial polytopes have toric h = usual h") {
  const auto oct = hypersimplex_face_poset(2, 4);
  CHECK(toric_h_vector(oct).entries == bigs({1, 3, 3, 1}));
  CHECK(usual_h_from_f(f_vector(oct), 3).entries == bigs({1, 3, 3, 1}));
  for (int n = 2; n <= 7; ++n) {
    const auto simplex = hypersimplex_face_poset(1, n);
    CHECK(toric_h_vector(simplex).entries == std::vector<BigInt>(n, 1));
    CHECK(usual_h_from_f(f_vector(simplex), n - 1).entries == std::vector<BigInt>(n, 1));
  }
  CHECK_THROWS(usual_h_from_f(bigs({1, 2}), 3));
}

TEST_CASE("dual hypersimplices by recursion") {
  CHECK(toric_h_vector(dualize(hypersimplex_face_poset(2, 4))).entries == bigs({1, 5, 5, 1}));
  CHECK(toric_h_vector(dualize(hypersimplex_face_poset(3, 6))).entries == bigs({1, 7, 22, 22, 7, 1}));
  CHECK(toric_h_vector(dualize(hypersimplex_face_poset(2, 5))).entries == bigs({1, 6, 6, 6, 1}));
}

TEST_CASE("closed form") {
  CHECK(toric_h_formula(2, 5).entries == bigs({1, 6, 6, 6, 1}));
  CHECK(toric_h_formula(4, 8).entries == bigs({1, 9, 37, 93, 93, 37, 9, 1}));
  CHECK(toric_h_formula(5, 10).entries == bigs({1, 11, 56, 176, 386, 386, 176, 56, 11, 1}));
  CHECK(toric_h_formula(1, 5).entries == bigs({1, 1, 1, 1, 1}));
  CHECK_THROWS(toric_h_formula(3, 5));
  CHECK_THROWS(toric_h_formula(0, 5));
}

TEST_CASE("closed form agrees with the recursion, symmetry, sum rule") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const auto h = toric_h_formula(k, n).entries;
      CHECK(toric_h_vector(dualize(hypersimplex_face_poset(k, n))).entries == h);
      BigInt total = 0;
      for (std::size_t r = 0; r < h.size(); ++r) {
        CHECK(h[r] == h[h.size() - 1 - r]);
        total += h[r];
      }
      CHECK(total == k * binomial(n, k));
    }
}

TEST_CASE("first half agrees with the usual h-vector of the dual") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      const auto dual = dualize(hypersimplex_face_poset(k, n));
      const auto usual = usual_h_from_f(f_vector(dual), n - 1).entries;
      const auto h = toric_h_formula(k, n).entries;
      for (int r = 0; r < k; ++r) CHECK(usual[r] == h[r]);
    }
}
