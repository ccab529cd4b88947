#include <doctest.h>

#include <algorithm>

#include "hsimplex/growth.hpp"

using namespace hsimplex;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("lattice classes") {
  const LatticeClass a({1, 1, 1});
  CHECK(a.is_zero());
  const LatticeClass b({3, -1, 0});
  CHECK(b == LatticeClass({4, 0, 1}));
  CHECK((b + (-b)).is_zero());
  const LatticeClass c({5, 7, 2});
  const auto& rep = c.rep();
  const auto s = rep[0] + rep[1] + rep[2];
  CHECK(s >= 0);
  CHECK(s <= 2);
  CHECK_THROWS(LatticeClass({1}));
}

TEST_CASE("generators") {
  CHECK(generators(2).size() == 2);  // e_1 = -e_2 modulo (1,1)
  CHECK(generators(3).size() == 6);
  CHECK(generators(5).size() == 10);
}

TEST_CASE("coordination sequences") {
  CHECK(coordination_sequence(3, 3).values == bigs({1, 6, 12, 18}));
  CHECK(coordination_sequence(4, 3).values == bigs({1, 8, 26, 56}));
  CHECK(coordination_sequence(2, 4).values == bigs({1, 2, 2, 2, 2}));
  const auto ball = word_length_ball(4, 3);
  for (const auto& [cls, d] : ball) CHECK(ball.at(-cls) == d);
}

TEST_CASE("coordinator polynomial from a sequence") {
  CHECK(coordinator_from_sequence(3, coordination_sequence(3, 5)).padded(3) == bigs({1, 4, 1}));
  CHECK(coordinator_from_sequence(4, coordination_sequence(4, 6)).padded(4) == bigs({1, 5, 5, 1}));
  CHECK(coordinator_from_sequence(2, coordination_sequence(2, 4)).padded(2) == bigs({1, 1}));
  CoordinationSequence bad{3, bigs({1, 6, 12, 19})};
  CHECK_THROWS_AS(coordinator_from_sequence(3, bad), InconsistentSequence);
  CHECK_THROWS(coordinator_from_sequence(4, CoordinationSequence{4, bigs({1, 8})}));
}

TEST_CASE("closed form") {
  CHECK(coordinator_formula(2).padded(2) == bigs({1, 1}));
  CHECK(coordinator_formula(3).padded(3) == bigs({1, 4, 1}));
  CHECK(coordinator_formula(4).padded(4) == bigs({1, 5, 5, 1}));
  CHECK(coordinator_formula(5).padded(5) == bigs({1, 6, 16, 6, 1}));
  for (int n = 2; n <= 7; ++n)
    CHECK(coordinator_formula(n) == coordinator_from_sequence(n, coordination_sequence(n, n + 2)));
}

TEST_CASE("output helpers") {
  const auto s = coordination_sequence(3, 3);
  CHECK(to_oeis_text(s) == "1, 6, 12, 18");
  const auto j = growth_to_json(s, coordinator_formula(3));
  CHECK(j.at("n") == 3);
  CHECK(j.at("coordinator").dump() == "[1,4,1]");
}
