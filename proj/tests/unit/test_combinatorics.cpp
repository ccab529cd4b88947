#include <doctest.h>

#include "hsimplex/combinatorics.hpp"

using namespace hsimplex;

TEST_CASE("binomial values") {
  CHECK(binomial(9, 4) == 126);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK_THROWS_AS(binomial(-1, 0), InvalidParameters);
}

TEST_CASE("binomial agrees with Pascal's triangle") {
  std::vector<BigInt> row{1};
  for (int n = 1; n <= 40; ++n) {
    std::vector<BigInt> next(n + 1, 1);
    for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = next;
    for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == row[k]);
  }
}

TEST_CASE("binomial prefix sums") {
  CHECK(binomial_prefix_sum(6, 2) == 1 + 6 + 15);
  CHECK(binomial_prefix_sum(6, -1) == 0);
  CHECK(binomial_prefix_sum(6, 6) == 64);
}

TEST_CASE("index sets") {
  IndexSet s{1, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.to_string() == "{1,3,5}");
  CHECK(IndexSet{}.to_string() == "{}");
  CHECK(s.with(2) == IndexSet{1, 2, 3, 5});
  CHECK(s.without(1) == IndexSet{3, 5});
  CHECK(IndexSet{1, 3}.subset_of(s));
  CHECK(IndexSet{2, 4}.disjoint(s));
  CHECK(IndexSet::full(4).minus(s) == IndexSet{2, 4});
  CHECK(s.elements() == std::vector<int>{1, 3, 5});
}

TEST_CASE("k-subsets come out in lexicographic order") {
  const auto subs = k_subsets(5, 3);
  REQUIRE(subs.size() == 10);
  CHECK(subs.front() == IndexSet{1, 2, 3});
  CHECK(subs[1] == IndexSet{1, 2, 4});
  CHECK(subs.back() == IndexSet{3, 4, 5});
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) CHECK(lex_less(subs[i], subs[i + 1]));

  const auto of = k_subsets_of(IndexSet{2, 4, 5}, 2);
  REQUIRE(of.size() == 3);
  CHECK(of[0] == IndexSet{2, 4});
  CHECK(of[2] == IndexSet{4, 5});
  CHECK(k_subsets(4, 0) == std::vector<IndexSet>{IndexSet{}});
  CHECK(k_subsets(3, 4).empty());
}
