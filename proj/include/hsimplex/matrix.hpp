#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hsimplex/bigint.hpp"

namespace hsimplex {

/// Exact rational matrix.
///
/// Every (row, col) position is addressable; rows keep only their nonzero
/// entries, sorted by column. The balancing systems at n = 10 have ~2e8
/// positions but at most four nonzeros per row.
class RationalMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Dense row-major construction, mostly for tests.
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);

  /// Appends a row given as (col, value) pairs in any order; zeros and
  /// duplicate columns are folded. Returns the new row index.
  std::size_t append_row(std::vector<Entry> entries);
  std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }

  /// Returns P_r * A * P_c where row i of the result is row row_perm[i] of A
  /// and column j of the result is column col_perm[j] of A.
  RationalMatrix permuted(std::span<const std::size_t> row_perm,
                          std::span<const std::size_t> col_perm) const;
  RationalMatrix transposed() const;

  std::vector<Rational> multiply(std::span<const Rational> v) const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

/// Rank over Q by fraction-free elimination on the denominator-cleared integer
/// rows. Each row's pivot is its first nonzero column after reduction against
/// the pivots found so far, so the trace is fully deterministic.
std::size_t rank_exact(const RationalMatrix& m);

class DenominatorDivisibleByPrime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rank of m reduced modulo the prime p (p < 2^31). Never exceeds rank_exact(m).
std::size_t rank_mod_p(const RationalMatrix& m, std::uint32_t p);

inline constexpr std::uint32_t kDefaultPrime = 10007;

/// W_{i,j}(n): rows are the i-subsets of {1..n}, columns the j-subsets, both in
/// lexicographic order; entry 1 iff the row set is contained in the column set.
RationalMatrix set_inclusion_matrix(int i, int j, int n);

}  // namespace hsimplex
