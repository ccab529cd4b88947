#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsimplex/bigint.hpp"
#include "hsimplex/branch_shift.hpp"
#include "hsimplex/combinatorics.hpp"
#include "hsimplex/matrix.hpp"

namespace hsimplex {

/// Codimension-r cones of the normal fan of the hypersimplex Delta_{k,n}:
/// pairs (I, J) with |I| + |J| = n - r - 1, |I| < k, |J| < n - k.
///
/// Cones are ordered by |J| ascending, then I, then J lexicographically; this
/// ordering is part of the contract (column order of every matrix below).
/// level(I, J) is the distance of |I| from its largest feasible value.
struct ConeSet {
  int r = 0;
  int k = 0;
  int n = 0;
  std::vector<ConePair> cones;
  std::vector<int> level;  // parallel to cones
  int num_levels = 0;
  int max_I = 0;  // largest feasible |I|

  std::size_t size() const { return cones.size(); }
  /// Column of (I, J); throws std::out_of_range if the pair is not a cone.
  std::size_t index_of(ConePair c) const;

  std::unordered_map<std::uint64_t, std::size_t> index;
};

/// Requires 1 <= k <= n - 1 and 0 <= r <= n - 1. The level count formulas
/// hold for k <= n/2; larger k is accepted so the k <-> n-k symmetry can be
/// checked directly.
ConeSet enumerate_cones(int r, int k, int n);

/// One row per instantiated balancing condition:
///   * c(Ax,B) - c(Ay,B) - c(A,Bx) + c(A,By) = 0 for disjoint A, B, {x < y}
///     with |A| < k-1, |B| < n-k-1, |A| + |B| = n-r-2;
///   * c(I,J) - c(I,J') = 0 for |I| = k-1 and J, J' consecutive in lex order;
///   * c(I,J) - c(I',J) = 0 for |J| = n-k-1 and I, I' consecutive in lex order.
/// Columns follow cs.cones.
RationalMatrix balancing_matrix(const ConeSet& cs);

enum class RankMode { exact, mod_p };

std::string to_string(RankMode mode);
RankMode parse_rank_mode(const std::string& s);

/// Dimension of the space of Minkowski weights on codimension-r cones,
/// i.e. the nullity of the balancing matrix. r = 0 returns 1.
BigInt chow_betti_oracle(int r, int k, int n, RankMode mode = RankMode::exact,
                         std::uint32_t prime = kDefaultPrime);

/// Closed form for the Chow-Betti number beta_{r,k,n}, 1 <= k <= n/2.
BigInt chow_betti_formula(int r, int k, int n, const BranchShift& shift = {});

/// beta_{0..n-1}, graded by codimension.
std::vector<BigInt> chow_betti_formula_all(int k, int n, const BranchShift& shift = {});

/// Rational function on the cones of a ConeSet, values indexed like cs.cones.
struct MinkowskiWeight {
  IndexSet S;  // generating set for basis weights, empty otherwise
  std::vector<Rational> values;
};

/// c_S: 1 on (I, J) iff S is contained in I u J and |J n S| = level(I, J).
/// Requires |S| < cs.num_levels.
MinkowskiWeight basis_weight(IndexSet S, const ConeSet& cs);

/// All admissible S (|S| < number of levels), by size then lexicographically.
std::vector<IndexSet> basis_index_sets(const ConeSet& cs);

/// True iff w satisfies every balancing condition of cs.
bool is_minkowski_weight(const ConeSet& cs, const RationalMatrix& balancing, const MinkowskiWeight& w);

struct BasisReport {
  int r = 0, k = 0, n = 0;
  BigInt betti_formula;
  BigInt betti_oracle;
  std::size_t basis_count = 0;
  bool basis_ok = false;         // every c_S is balanced
  bool independent = false;      // stacked c_S have full row rank
  bool block_triangular = false; // block structure against set-inclusion matrices
  RankMode mode = RankMode::exact;

  bool passed() const;
};

BasisReport verify_basis(int r, int k, int n, RankMode mode = RankMode::exact,
                         std::uint32_t prime = kDefaultPrime);

nlohmann::json to_json(const BasisReport& report);

}  // namespace hsimplex
