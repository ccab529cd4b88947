#include "hsimplex/chow.hpp"

#include <algorithm>
#include <stdexcept>

#include "hsimplex/json_io.hpp"

namespace hsimplex {

std::size_t ConeSet::index_of(ConePair c) const {
  auto it = index.find(c.key());
  if (it == index.end()) throw std::out_of_range("ConeSet::index_of: " + c.to_string() + " is not a cone");
  return it->second;
}

ConeSet enumerate_cones(int r, int k, int n) {
  if (n < 2 || n > 31 || k < 1 || k > n - 1 || r < 0 || r > n - 1)
    throw InvalidParameters("enumerate_cones: need 1 <= k <= n-1, 0 <= r <= n-1, 2 <= n <= 31");
  ConeSet cs;
  cs.r = r;
  cs.k = k;
  cs.n = n;
  const int s = n - r - 1;
  const int min_I = std::max(0, s - (n - k - 1));
  const int max_I = std::min(k - 1, s);
  cs.max_I = max_I;
  cs.num_levels = std::max(0, max_I - min_I + 1);
  const IndexSet full = IndexSet::full(n);
  // |J| ascending is |I| descending.
  for (int a = max_I; a >= min_I; --a) {
    for (IndexSet I : k_subsets(n, a)) {
      for (IndexSet J : k_subsets_of(full.minus(I), s - a)) {
        cs.index.emplace(ConePair{I, J}.key(), cs.cones.size());
        cs.cones.push_back({I, J});
        cs.level.push_back(max_I - a);
      }
    }
  }
  return cs;
}

RationalMatrix balancing_matrix(const ConeSet& cs) {
  const int n = cs.n, k = cs.k;
  const int s = n - cs.r - 1;
  const IndexSet full = IndexSet::full(n);
  RationalMatrix m(0, cs.size());
  using E = RationalMatrix::Entry;

  // Exchange conditions: |A| < k-1, |B| < n-k-1, |A| + |B| = s - 1.
  for (int a = 0; a <= std::min(k - 2, s - 1); ++a) {
    const int b = s - 1 - a;
    if (b < 0 || b > n - k - 2) continue;
    for (IndexSet A : k_subsets(n, a)) {
      for (IndexSet B : k_subsets_of(full.minus(A), b)) {
        const std::vector<int> free = full.minus(A | B).elements();
        for (std::size_t xi = 0; xi < free.size(); ++xi) {
          for (std::size_t yi = xi + 1; yi < free.size(); ++yi) {
            const int x = free[xi], y = free[yi];
            m.append_row({E{cs.index_of({A.with(x), B}), 1}, E{cs.index_of({A.with(y), B}), -1},
                          E{cs.index_of({A, B.with(x)}), -1}, E{cs.index_of({A, B.with(y)}), 1}});
          }
        }
      }
    }
  }

  // |I| = k-1: c(I, .) is constant.
  if (cs.max_I == k - 1 && s - (k - 1) <= n - k - 1) {
    for (IndexSet I : k_subsets(n, k - 1)) {
      const auto Js = k_subsets_of(full.minus(I), s - (k - 1));
      for (std::size_t t = 0; t + 1 < Js.size(); ++t)
        m.append_row({E{cs.index_of({I, Js[t]}), 1}, E{cs.index_of({I, Js[t + 1]}), -1}});
    }
  }

  // |J| = n-k-1: c(., J) is constant.
  const int i_size = s - (n - k - 1);
  if (i_size >= 0 && i_size <= k - 1) {
    for (IndexSet J : k_subsets(n, n - k - 1)) {
      const auto Is = k_subsets_of(full.minus(J), i_size);
      for (std::size_t t = 0; t + 1 < Is.size(); ++t)
        m.append_row({E{cs.index_of({Is[t], J}), 1}, E{cs.index_of({Is[t + 1], J}), -1}});
    }
  }
  return m;
}

std::string to_string(RankMode mode) { return mode == RankMode::exact ? "exact" : "modp"; }

RankMode parse_rank_mode(const std::string& s) {
  if (s == "exact") return RankMode::exact;
  if (s == "modp" || s == "mod_p") return RankMode::mod_p;
  throw InvalidParameters("unknown rank mode '" + s + "' (expected exact|modp)");
}

namespace {

std::size_t rank_in_mode(const RationalMatrix& m, RankMode mode, std::uint32_t prime) {
  return mode == RankMode::exact ? rank_exact(m) : rank_mod_p(m, prime);
}

}  // namespace

BigInt chow_betti_oracle(int r, int k, int n, RankMode mode, std::uint32_t prime) {
  if (r == 0) {
    if (n < 2 || k < 1 || k > n - 1) throw InvalidParameters("chow_betti_oracle: need 1 <= k <= n-1");
    return 1;  // constants are the only weights on full-dimensional cones
  }
  const ConeSet cs = enumerate_cones(r, k, n);
  const RationalMatrix m = balancing_matrix(cs);
  const std::size_t rank = rank_in_mode(m, mode, prime);
  return BigInt(static_cast<unsigned long>(cs.size() - rank));
}

BigInt chow_betti_formula(int r, int k, int n, const BranchShift& shift) {
  if (n < 2 || k < 1 || 2 * k > n || r < 0 || r > n - 1)
    throw InvalidParameters("chow_betti_formula: need 1 <= k <= floor(n/2), 0 <= r <= n-1");
  if (r == 0) return 1;
  if (r <= k + shift.chow_first) return binomial_prefix_sum(n, r - 1);
  if (r >= n - k + shift.chow_last) return binomial_prefix_sum(n, n - r - 1);
  return binomial_prefix_sum(n, k - 1);
}

std::vector<BigInt> chow_betti_formula_all(int k, int n, const BranchShift& shift) {
  std::vector<BigInt> out;
  for (int r = 0; r < n; ++r) out.push_back(chow_betti_formula(r, k, n, shift));
  return out;
}

MinkowskiWeight basis_weight(IndexSet S, const ConeSet& cs) {
  if (S.size() >= cs.num_levels)
    throw InvalidParameters("basis_weight: |S| = " + std::to_string(S.size()) +
                            " must be below the number of levels (" + std::to_string(cs.num_levels) + ")");
  MinkowskiWeight w{S, std::vector<Rational>(cs.size(), 0)};
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto& [I, J] = cs.cones[c];
    if (S.subset_of(I | J) && (J & S).size() == cs.level[c]) w.values[c] = 1;
  }
  return w;
}

std::vector<IndexSet> basis_index_sets(const ConeSet& cs) {
  std::vector<IndexSet> out;
  for (int size = 0; size < cs.num_levels; ++size)
    for (IndexSet S : k_subsets(cs.n, size)) out.push_back(S);
  return out;
}

bool is_minkowski_weight(const ConeSet& cs, const RationalMatrix& balancing, const MinkowskiWeight& w) {
  if (w.values.size() != cs.size()) return false;
  const auto residual = balancing.multiply(w.values);
  return std::all_of(residual.begin(), residual.end(), [](const Rational& v) { return v == 0; });
}

bool BasisReport::passed() const {
  return basis_ok && independent && block_triangular && betti_formula == betti_oracle &&
         betti_formula == static_cast<unsigned long>(basis_count);
}

namespace {

// Checks the block lower triangular shape of the stacked basis matrix and that
// each diagonal block is a column-repetition of a full-row-rank W_{i,j}(n).
bool check_block_triangular(const ConeSet& cs, const std::vector<IndexSet>& sets,
                            const std::vector<MinkowskiWeight>& weights, RankMode mode, std::uint32_t prime) {
  for (std::size_t row = 0; row < sets.size(); ++row) {
    const int i = sets[row].size();
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const bool nonzero = weights[row].values[c] != 0;
      if (cs.level[c] > i && nonzero) return false;
      if (cs.level[c] == i && nonzero != sets[row].subset_of(cs.cones[c].J)) return false;
    }
  }
  for (int i = 0; i < cs.num_levels; ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < cs.size(); ++c)
      if (cs.level[c] == i) cols.push_back(c);
    if (cols.empty()) return false;
    const int j = cs.cones[cols.front()].J.size();
    std::vector<std::uint32_t> seen;
    for (std::size_t c : cols) {
      if (cs.cones[c].J.size() != j) return false;
      seen.push_back(cs.cones[c].J.mask());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (seen.size() != binomial(cs.n, j)) return false;  // every column of W_{i,j}(n) occurs
    if (i > j || i + j > cs.n) return false;

    RationalMatrix block(0, cols.size());
    for (std::size_t row = 0; row < sets.size(); ++row) {
      if (sets[row].size() != i) continue;
      std::vector<RationalMatrix::Entry> entries;
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (weights[row].values[cols[t]] != 0) entries.push_back({t, weights[row].values[cols[t]]});
      block.append_row(std::move(entries));
    }
    if (binomial(cs.n, i) != static_cast<unsigned long>(rank_in_mode(block, mode, prime))) return false;
  }
  return true;
}

}  // namespace

BasisReport verify_basis(int r, int k, int n, RankMode mode, std::uint32_t prime) {
  BasisReport rep;
  rep.r = r;
  rep.k = k;
  rep.n = n;
  rep.mode = mode;
  rep.betti_formula = chow_betti_formula(r, k, n);
  if (r == 0) {
    // The constant weight spans; there are no lower-dimensional cones to balance.
    rep.betti_oracle = 1;
    rep.basis_count = 1;
    rep.basis_ok = rep.independent = rep.block_triangular = true;
    return rep;
  }
  const ConeSet cs = enumerate_cones(r, k, n);
  const RationalMatrix balancing = balancing_matrix(cs);
  rep.betti_oracle = BigInt(static_cast<unsigned long>(cs.size() - rank_in_mode(balancing, mode, prime)));

  const auto sets = basis_index_sets(cs);
  std::vector<MinkowskiWeight> weights;
  weights.reserve(sets.size());
  for (IndexSet S : sets) weights.push_back(basis_weight(S, cs));
  rep.basis_count = weights.size();
  rep.basis_ok = std::all_of(weights.begin(), weights.end(),
                             [&](const MinkowskiWeight& w) { return is_minkowski_weight(cs, balancing, w); });

  RationalMatrix stacked(0, cs.size());
  for (const auto& w : weights) {
    std::vector<RationalMatrix::Entry> entries;
    for (std::size_t c = 0; c < cs.size(); ++c)
      if (w.values[c] != 0) entries.push_back({c, w.values[c]});
    stacked.append_row(std::move(entries));
  }
  rep.independent = rank_in_mode(stacked, mode, prime) == weights.size();
  rep.block_triangular = check_block_triangular(cs, sets, weights, mode, prime);
  return rep;
}

nlohmann::json to_json(const BasisReport& rep) {
  return {{"r", rep.r},
          {"k", rep.k},
          {"n", rep.n},
          {"betti_formula", big_to_json(rep.betti_formula)},
          {"betti_oracle", big_to_json(rep.betti_oracle)},
          {"basis_count", rep.basis_count},
          {"basis_ok", rep.basis_ok},
          {"independent", rep.independent},
          {"block_triangular", rep.block_triangular},
          {"mode", to_string(rep.mode)}};
}

}  // namespace hsimplex
