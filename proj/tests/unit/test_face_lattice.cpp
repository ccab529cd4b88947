#include <doctest.h>

#include "hsimplex/face_lattice.hpp"

using namespace hsimplex;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// 0^, four vertices, four edges of a square, 1^
EulerianPoset square() {
  std::vector<int> ranks{0, 1, 1, 1, 1, 2, 2, 2, 2, 3};
  std::vector<EulerianPoset::Cover> covers{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6},
                                           {3, 7}, {4, 7}, {4, 8}, {1, 8}, {5, 9}, {6, 9}, {7, 9}, {8, 9}};
  return EulerianPoset(ranks, covers);
}

}  // namespace

TEST_CASE("construction rejects malformed posets") {
  CHECK_THROWS(EulerianPoset({}, {}));
  CHECK_THROWS(EulerianPoset({0, 2}, {{0, 1}}));         // cover skips a rank
  CHECK_THROWS(EulerianPoset({0, 1, 1}, {{0, 1}, {0, 2}}));  // two maximal elements
  CHECK_THROWS(EulerianPoset({0, 1}, {{0, 1}, {0, 1}}));
}

TEST_CASE("triangle") {
  const auto L = hypersimplex_face_poset(1, 3);
  CHECK(L.rank() == 3);
  CHECK(f_vector(L) == bigs({3, 3}));
  CHECK(is_eulerian(L));
}

TEST_CASE("octahedron and cube") {
  const auto oct = hypersimplex_face_poset(2, 4);
  CHECK(f_vector(oct) == bigs({6, 12, 8}));
  const auto cube = dualize(oct);
  CHECK(f_vector(cube) == bigs({8, 12, 6}));
  CHECK(is_eulerian(oct));
  CHECK(is_eulerian(cube));
  CHECK(dualize(cube) == oct);
}

TEST_CASE("hypersimplex (3,6)") {
  const auto L = hypersimplex_face_poset(3, 6);
  const auto f = f_vector(L);
  CHECK(f[0] == 20);
  CHECK(f[1] == 90);
  CHECK(f.back() == 12);  // facets: x_i = 0 or x_i = 1
  CHECK(is_eulerian(L));
}

TEST_CASE("vertex labels and covers") {
  const auto L = hypersimplex_face_poset(2, 4);
  const auto v = L.find({IndexSet{1, 2}, IndexSet{3, 4}});
  REQUIRE(v);
  CHECK(L.rank(*v) == 1);
  CHECK(L.upper_covers(*v).size() == 4);  // octahedron vertices have degree 4
  const auto facet = L.find({IndexSet{}, IndexSet{1}});
  REQUIRE(facet);
  CHECK(L.rank(*facet) == 3);
  CHECK(L.key(*facet) == StructureKey{0, 1});
  CHECK(L.leq(*v, *facet) == false);
  CHECK(L.leq(*v, L.top()));
  CHECK(L.down_set(*facet).size() == 8);  // empty face, 3 vertices, 3 edges, the triangle
}

TEST_CASE("lower intervals") {
  const auto cube = dualize(hypersimplex_face_poset(2, 4));
  for (std::size_t e = 0; e < cube.size(); ++e) {
    if (cube.rank(e) != 3) continue;
    const auto sq = lower_interval(cube, e);
    CHECK(sq.size() == 10);
    CHECK(f_vector(sq) == bigs({4, 4}));
    CHECK(is_eulerian(sq));
  }
}

TEST_CASE("Eulerian check") {
  CHECK(is_eulerian(square()));
  CHECK(is_eulerian(EulerianPoset({0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(is_eulerian(EulerianPoset({0, 1, 2}, {{0, 1}, {1, 2}})));
  // a rank-2 interval with three atoms
  CHECK_FALSE(is_eulerian(EulerianPoset({0, 1, 1, 1, 2}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})));
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      CHECK(is_eulerian(hypersimplex_face_poset(k, n)));
      CHECK(is_eulerian(dualize(hypersimplex_face_poset(k, n))));
    }
}

TEST_CASE("Euler relation and isomorphism k <-> n-k") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const auto f = f_vector(hypersimplex_face_poset(k, n));
      BigInt alt = 0;
      for (std::size_t i = 0; i < f.size(); ++i) alt += (i % 2 ? -f[i] : f[i]);
      CHECK(alt == ((n - 1) % 2 ? 2 : 0));
      CHECK(f == f_vector(hypersimplex_face_poset(n - k, n)));
    }
}

TEST_CASE("json dump") {
  const auto j = hypersimplex_face_poset(1, 2).to_json();
  CHECK(j.at("elements").size() == 4);
  CHECK(j.at("covers").size() == 4);
}
