#include "hsimplex/toric_h.hpp"

#include <map>

#include "hsimplex/combinatorics.hpp"

namespace hsimplex {

IntPolynomial g_from_h(const IntPolynomial& h, int rank) {
  if (rank <= 0) return IntPolynomial::constant(1);
  const int m = (rank - 1) / 2;
  std::vector<BigInt> g(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) g[i] = h.coeff(i) - h.coeff(i - 1);
  return IntPolynomial(std::move(g));
}

namespace {

// g([0^, p]) for every element p, in id (hence rank) order.
std::vector<IntPolynomial> interval_g_polys(const EulerianPoset& L, std::vector<IntPolynomial>& powers) {
  std::vector<IntPolynomial> g(L.size());
  std::map<StructureKey, IntPolynomial> memo;
  for (std::size_t p = 0; p < L.size(); ++p) {
    const int rp = L.rank(p);
    if (rp == 0) {
      g[p] = IntPolynomial::constant(1);
      continue;
    }
    const auto& key = L.key(p);
    if (key) {
      if (auto it = memo.find(*key); it != memo.end()) {
        g[p] = it->second;
        continue;
      }
    }
    IntPolynomial h;
    for (std::size_t q : L.down_set(p)) {
      if (q == p) continue;
      h += g[q] * powers[rp - L.rank(q) - 1];
    }
    g[p] = g_from_h(h, rp);
    if (key) memo.emplace(*key, g[p]);
  }
  return g;
}

}  // namespace

IntPolynomial toric_h_poly(const EulerianPoset& L) {
  if (L.rank() == 0) return IntPolynomial::constant(1);
  if (!is_eulerian(L)) throw NotEulerian("toric_h_poly: poset is not Eulerian");
  std::vector<IntPolynomial> powers;
  for (int m = 0; m <= L.rank(); ++m) powers.push_back(IntPolynomial::x_minus_one_pow(m));
  const auto g = interval_g_polys(L, powers);
  IntPolynomial h;
  for (std::size_t p = 0; p + 1 < L.size(); ++p) h += g[p] * powers[L.rank() - L.rank(p) - 1];
  return h;
}

IntPolynomial toric_g_poly(const EulerianPoset& L) { return g_from_h(toric_h_poly(L), L.rank()); }

HVector toric_h_vector(const EulerianPoset& L) {
  return HVector{toric_h_poly(L).padded(static_cast<std::size_t>(std::max(1, L.rank())))};
}

HVector usual_h_from_f(const std::vector<BigInt>& f, int d) {
  if (d < 0 || static_cast<int>(f.size()) != d)
    throw std::invalid_argument("usual_h_from_f: expected " + std::to_string(d) + " face counts, got " +
                                std::to_string(f.size()));
  IntPolynomial sum;
  for (int i = 0; i <= d; ++i) {
    const BigInt count = i == 0 ? BigInt(1) : f[i - 1];
    IntPolynomial term = IntPolynomial::x_minus_one_pow(d - i);
    term *= count;
    sum += term;
  }
  HVector h;
  for (int j = 0; j <= d; ++j) h.entries.push_back(sum.coeff(d - j));
  return h;
}

HVector toric_h_formula(int k, int n, const BranchShift& shift) {
  if (n < 2 || k < 1 || 2 * k > n)
    throw InvalidParameters("toric_h_formula: need 1 <= k <= floor(n/2)");
  auto branch = [&](int r) {
    if (r <= k - 1 + shift.toric_first) return binomial_prefix_sum(n, r);
    return binomial_prefix_sum(n, k - 1);
  };
  HVector h;
  for (int r = 0; r < n; ++r) h.entries.push_back(r <= n / 2 + shift.toric_middle ? branch(r) : branch(n - 1 - r));
  return h;
}

}  // namespace hsimplex
