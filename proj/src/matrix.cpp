#include "hsimplex/matrix.hpp"

#include <algorithm>
#include <string>

#include "hsimplex/combinatorics.hpp"

namespace hsimplex {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  cols_ = rows.size() ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
    std::vector<Entry> entries;
    std::size_t j = 0;
    for (long v : r) {
      if (v != 0) entries.push_back({j, Rational(v)});
      ++j;
    }
    rows_.push_back(std::move(entries));
  }
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational RationalMatrix::at(std::size_t i, std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("RationalMatrix::at: column out of range");
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->value : Rational(0);
}

void RationalMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (j >= cols_) throw std::out_of_range("RationalMatrix::set: column out of range");
  auto& r = rows_.at(i);
  Rational v = value;
  v.canonicalize();
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  const bool present = it != r.end() && it->col == j;
  if (v == 0) {
    if (present) r.erase(it);
  } else if (present) {
    it->value = std::move(v);
  } else {
    r.insert(it, Entry{j, std::move(v)});
  }
}

std::size_t RationalMatrix::append_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::vector<Entry> folded;
  folded.reserve(entries.size());
  for (auto& e : entries) {
    if (e.col >= cols_) throw std::out_of_range("RationalMatrix::append_row: column out of range");
    e.value.canonicalize();
    if (!folded.empty() && folded.back().col == e.col) {
      folded.back().value += e.value;
    } else {
      folded.push_back(std::move(e));
    }
  }
  std::erase_if(folded, [](const Entry& e) { return e.value == 0; });
  rows_.push_back(std::move(folded));
  return rows_.size() - 1;
}

RationalMatrix RationalMatrix::permuted(std::span<const std::size_t> row_perm,
                                        std::span<const std::size_t> col_perm) const {
  if (row_perm.size() != rows() || col_perm.size() != cols_)
    throw std::invalid_argument("RationalMatrix::permuted: permutation size mismatch");
  std::vector<std::size_t> new_col(cols_);
  for (std::size_t j = 0; j < cols_; ++j) new_col.at(col_perm[j]) = j;
  RationalMatrix out(0, cols_);
  for (std::size_t i : row_perm) {
    std::vector<Entry> entries;
    for (const auto& e : rows_.at(i)) entries.push_back({new_col[e.col], e.value});
    out.append_row(std::move(entries));
  }
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) out.rows_[e.col].push_back({i, e.value});
  return out;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::multiply: size mismatch");
  std::vector<Rational> out(rows(), 0);
  std::vector<Rational> w(v.begin(), v.end());
  for (auto& x : w) x.canonicalize();
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) out[i] += e.value * w[e.col];
  return out;
}

namespace {

struct IntEntry {
  std::size_t col;
  BigInt value;
};
using IntRow = std::vector<IntEntry>;

// Divides out the content and makes the leading entry positive.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

IntRow clear_denominators(std::span<const RationalMatrix::Entry> row) {
  BigInt l = 1;
  for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    BigInt v = l / e.value.get_den();
    v *= e.value.get_num();
    out.push_back({e.col, std::move(v)});
  }
  make_primitive(out);
  return out;
}

// s * row - t * pivot, where pivot's leading column cancels.
IntRow combine(const IntRow& row, const BigInt& s, const IntRow& pivot, const BigInt& t) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  BigInt tmp;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].col < pivot[b].col)) {
      out.push_back({row[a].col, s * row[a].value});
      ++a;
    } else if (a == row.size() || pivot[b].col < row[a].col) {
      out.push_back({pivot[b].col, -(t * pivot[b].value)});
      ++b;
    } else {
      tmp = s * row[a].value;
      tmp -= t * pivot[b].value;
      if (tmp != 0) out.push_back({row[a].col, tmp});
      ++a;
      ++b;
    }
  }
  return out;
}

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

}  // namespace

std::size_t rank_exact(const RationalMatrix& m) {
  std::vector<IntRow> pivots;
  std::vector<std::size_t> pivot_of_col(m.cols(), kNoPivot);
  BigInt g, s, t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow row = clear_denominators(m.row(i));
    while (!row.empty()) {
      const std::size_t c = row.front().col;
      if (pivot_of_col[c] == kNoPivot) {
        pivot_of_col[c] = pivots.size();
        pivots.push_back(std::move(row));
        break;
      }
      const IntRow& piv = pivots[pivot_of_col[c]];
      mpz_gcd(g.get_mpz_t(), piv.front().value.get_mpz_t(), row.front().value.get_mpz_t());
      mpz_divexact(s.get_mpz_t(), piv.front().value.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(t.get_mpz_t(), row.front().value.get_mpz_t(), g.get_mpz_t());
      row = combine(row, s, piv, t);
      if (!row.empty() && row.front().col == c) row.erase(row.begin());
      make_primitive(row);
    }
  }
  return pivots.size();
}

namespace {

struct ModEntry {
  std::uint32_t col;
  std::uint32_t value;
};
using ModRow = std::vector<ModEntry>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint32_t reduce_mod(const BigInt& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

}  // namespace

std::size_t rank_mod_p(const RationalMatrix& m, std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("rank_mod_p: prime must lie in [2, 2^31)");
  std::vector<ModRow> pivots;
  std::vector<std::size_t> pivot_of_col(m.cols(), kNoPivot);
  ModRow next;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ModRow row;
    for (const auto& e : m.row(i)) {
      const std::uint32_t den = reduce_mod(e.value.get_den(), p);
      if (den == 0)
        throw DenominatorDivisibleByPrime("rank_mod_p: denominator divisible by " + std::to_string(p) +
                                          " in row " + std::to_string(i));
      const std::uint64_t v = reduce_mod(e.value.get_num(), p) * inv_mod(den, p) % p;
      if (v) row.push_back({static_cast<std::uint32_t>(e.col), static_cast<std::uint32_t>(v)});
    }
    while (!row.empty()) {
      const std::size_t c = row.front().col;
      if (pivot_of_col[c] == kNoPivot) {
        const std::uint64_t inv = inv_mod(row.front().value, p);
        for (auto& e : row) e.value = static_cast<std::uint32_t>(e.value * inv % p);
        pivot_of_col[c] = pivots.size();
        pivots.push_back(std::move(row));
        break;
      }
      // Pivot rows are monic: row <- row - a * pivot.
      const ModRow& piv = pivots[pivot_of_col[c]];
      const std::uint64_t a = row.front().value;
      next.clear();
      std::size_t x = 1, y = 1;
      while (x < row.size() || y < piv.size()) {
        if (y == piv.size() || (x < row.size() && row[x].col < piv[y].col)) {
          next.push_back(row[x++]);
        } else if (x == row.size() || piv[y].col < row[x].col) {
          next.push_back({piv[y].col, static_cast<std::uint32_t>((p - a * piv[y].value % p) % p)});
          ++y;
        } else {
          const std::uint64_t v = (row[x].value + p - a * piv[y].value % p) % p;
          if (v) next.push_back({row[x].col, static_cast<std::uint32_t>(v)});
          ++x;
          ++y;
        }
      }
      row.swap(next);
    }
  }
  return pivots.size();
}

RationalMatrix set_inclusion_matrix(int i, int j, int n) {
  if (n < 0 || i < 0 || j < 0 || i > n || j > n)
    throw InvalidParameters("set_inclusion_matrix: need 0 <= i, j <= n");
  const auto row_sets = k_subsets(n, i);
  const auto col_sets = k_subsets(n, j);
  RationalMatrix w(0, col_sets.size());
  for (IndexSet a : row_sets) {
    std::vector<RationalMatrix::Entry> entries;
    for (std::size_t c = 0; c < col_sets.size(); ++c)
      if (a.subset_of(col_sets[c])) entries.push_back({c, Rational(1)});
    w.append_row(std::move(entries));
  }
  return w;
}

}  // namespace hsimplex
