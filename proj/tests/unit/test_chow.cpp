#include <doctest.h>

#include "hsimplex/chow.hpp"

using namespace hsimplex;

TEST_CASE("cone enumeration and levels") {
  const auto cs = enumerate_cones(2, 3, 8);
  CHECK(cs.level[cs.index_of({IndexSet{1, 2}, IndexSet{3, 4, 5}})] == 0);
  CHECK(cs.level[cs.index_of({IndexSet{1}, IndexSet{2, 3, 4, 5}})] == 1);
  CHECK_THROWS(cs.index_of({IndexSet{1, 2, 3}, IndexSet{4, 5}}));

  const auto small = enumerate_cones(2, 2, 4);
  CHECK(small.size() == 8);
  for (std::size_t c = 0; c < small.size(); ++c) {
    const auto [I, J] = small.cones[c];
    CHECK(I.size() + J.size() == 1);
    if (c > 0) CHECK(small.cones[c - 1].J.size() <= J.size());
  }
  CHECK(small.num_levels == 2);
  CHECK_THROWS_AS(enumerate_cones(1, 0, 4), InvalidParameters);
  CHECK_THROWS_AS(enumerate_cones(4, 2, 4), InvalidParameters);
}

TEST_CASE("balancing matrices") {
  const auto cs = enumerate_cones(2, 2, 4);
  const auto m = balancing_matrix(cs);
  CHECK(m.cols() == 8);
  CHECK(rank_exact(m) == 3);
  CHECK(cs.size() - rank_exact(m) == 5);
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int r = 1; r < n; ++r) {
        const auto c = enumerate_cones(r, k, n);
        MinkowskiWeight constant{IndexSet{}, std::vector<Rational>(c.size(), 1)};
        CHECK(is_minkowski_weight(c, balancing_matrix(c), constant));
      }
}

TEST_CASE("nullity oracle") {
  CHECK(chow_betti_oracle(0, 2, 4) == 1);
  CHECK(chow_betti_oracle(1, 2, 4) == 1);
  CHECK(chow_betti_oracle(2, 2, 4) == 5);
  CHECK(chow_betti_oracle(3, 2, 4) == 1);
  CHECK(chow_betti_oracle(3, 3, 6) == 22);
  CHECK(chow_betti_oracle(3, 3, 6, RankMode::mod_p) == 22);
  CHECK(chow_betti_oracle(2, 5, 10, RankMode::mod_p, 10007) == 11);
  // Delta_{k,n} and Delta_{n-k,n} have the same normal fan up to a linear map
  for (int r = 1; r < 6; ++r) CHECK(chow_betti_oracle(r, 2, 6) == chow_betti_oracle(r, 4, 6));
}

TEST_CASE("closed form") {
  CHECK(chow_betti_formula(0, 2, 4) == 1);
  CHECK(chow_betti_formula(2, 2, 4) == 5);
  CHECK(chow_betti_formula(4, 4, 8) == 93);
  CHECK(chow_betti_formula(8, 3, 9) == 1);
  CHECK(chow_betti_formula_all(3, 8) == std::vector<BigInt>{1, 1, 9, 37, 37, 37, 9, 1});
  CHECK(chow_betti_formula_all(1, 4) == std::vector<BigInt>{1, 1, 1, 1});
  CHECK_THROWS(chow_betti_formula(1, 3, 5));
  CHECK_THROWS(chow_betti_formula(5, 2, 5));
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int r = 0; r < n; ++r) CHECK(chow_betti_formula(r, k, n) == chow_betti_oracle(r, k, n));
}

TEST_CASE("basis weights") {
  const auto cs = enumerate_cones(2, 3, 8);
  const auto w = basis_weight(IndexSet{3}, cs);
  CHECK(w.values[cs.index_of({IndexSet{1}, IndexSet{2, 3, 4, 5}})] == 1);
  CHECK(w.values[cs.index_of({IndexSet{1, 2}, IndexSet{3, 4, 5}})] == 0);
  const auto empty = basis_weight(IndexSet{}, cs);
  for (std::size_t c = 0; c < cs.size(); ++c) CHECK((empty.values[c] == 1) == (cs.level[c] == 0));
  CHECK(is_minkowski_weight(cs, balancing_matrix(cs), w));
  CHECK_THROWS_AS(basis_weight(IndexSet{1, 2, 3}, cs), InvalidParameters);
}

TEST_CASE("basis verification") {
  const auto a = verify_basis(2, 2, 4);
  CHECK(a.basis_count == 5);
  CHECK(a.passed());
  const auto b = verify_basis(3, 3, 6);
  CHECK(b.basis_count == 22);
  CHECK(b.passed());
  for (int k = 1; k <= 3; ++k) {
    const auto c = verify_basis(1, k, 6);
    CHECK(c.basis_count == 1);
    CHECK(c.passed());
  }
  CHECK(verify_basis(0, 2, 5).passed());
  CHECK(verify_basis(4, 3, 7, RankMode::mod_p).passed());
  const auto j = to_json(b);
  CHECK(j.at("basis_count") == 22);
  CHECK(j.at("mode") == "exact");
}
