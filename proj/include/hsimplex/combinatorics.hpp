#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsimplex/bigint.hpp"

namespace hsimplex {

/// Raised when (k, n, r) or similar parameters fall outside an operation's domain.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Sum_{i=0}^{upper} C(n, i); zero when upper < 0.
BigInt binomial_prefix_sum(int n, int upper);

/// A subset of {1, ..., 31} stored as a bit mask (element i <-> bit i-1).
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
  IndexSet(std::initializer_list<int> elements);

  /// {1, ..., n}
  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  constexpr bool subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint(IndexSet other) const { return (mask_ & other.mask_) == 0; }

  constexpr IndexSet with(int i) const { return IndexSet(mask_ | (1u << (i - 1))); }
  constexpr IndexSet without(int i) const { return IndexSet(mask_ & ~(1u << (i - 1))); }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(mask_ | o.mask_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(mask_ & o.mask_); }
  constexpr IndexSet minus(IndexSet o) const { return IndexSet(mask_ & ~o.mask_); }

  /// Sorted elements.
  std::vector<int> elements() const;
  std::string to_string() const;  // "{1,2,5}"

  friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.mask_ == b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

/// Ordered pair (I, J) of disjoint index sets. Labels the face F_{I,J} of a
/// hypersimplex (coordinates fixed to 1 on I and to 0 on J) and, dually, the
/// cone of the normal fan attached to that face.
struct ConePair {
  IndexSet I;
  IndexSet J;

  friend constexpr bool operator==(ConePair a, ConePair b) = default;
  constexpr std::uint64_t key() const { return (std::uint64_t{I.mask()} << 32) | J.mask(); }
  std::string to_string() const { return "(" + I.to_string() + "," + J.to_string() + ")"; }
};

/// Lexicographic order on the sorted element sequences (a proper prefix sorts first).
bool lex_less(IndexSet a, IndexSet b);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> k_subsets(int n, int k);

/// All k-subsets of `ground` in lexicographic order.
std::vector<IndexSet> k_subsets_of(IndexSet ground, int k);

}  // namespace hsimplex
