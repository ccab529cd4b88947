#include "hsimplex/combinatorics.hpp"

namespace hsimplex {

BigInt binomial(int n, int k) {
  if (n < 0) throw InvalidParameters("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt binomial_prefix_sum(int n, int upper) {
  BigInt sum = 0;
  for (int i = 0; i <= upper; ++i) sum += binomial(n, i);
  return sum;
}

IndexSet::IndexSet(std::initializer_list<int> elements) {
  for (int e : elements) {
    if (e < 1 || e > 32) throw InvalidParameters("IndexSet: element out of range 1..32");
    mask_ |= 1u << (e - 1);
  }
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

bool lex_less(IndexSet a, IndexSet b) {
  const std::uint32_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const std::uint32_t low = diff & (~diff + 1);
  // Both sets agree below `low`. The set holding `low` sorts first unless the
  // other one has no elements at or above `low` (then it is a proper prefix).
  if (a.mask() & low) return (b.mask() & ~(low - 1)) != 0;
  return (a.mask() & ~(low - 1)) == 0;
}

std::vector<IndexSet> k_subsets_of(IndexSet ground, int k) {
  const std::vector<int> pool = ground.elements();
  const int m = static_cast<int>(pool.size());
  std::vector<IndexSet> out;
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << (pool[i] - 1);
    out.emplace_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> k_subsets(int n, int k) { return k_subsets_of(IndexSet::full(n), k); }

}  // namespace hsimplex
