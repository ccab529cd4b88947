#include "hsimplex/growth.hpp"

#include <algorithm>
#include <numeric>

#include "hsimplex/combinatorics.hpp"
#include "hsimplex/json_io.hpp"

namespace hsimplex {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LatticeClass::LatticeClass(std::vector<std::int64_t> z) : rep_(std::move(z)) {
  if (rep_.size() < 2) throw InvalidParameters("LatticeClass: need at least 2 coordinates");
  const auto n = static_cast<std::int64_t>(rep_.size());
  const std::int64_t t = floor_div(std::accumulate(rep_.begin(), rep_.end(), std::int64_t{0}), n);
  for (auto& v : rep_) v -= t;
}

bool LatticeClass::is_zero() const {
  return std::all_of(rep_.begin(), rep_.end(), [](std::int64_t v) { return v == 0; });
}

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
  std::vector<std::int64_t> z(rep_);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += o.rep_.at(i);
  return LatticeClass(std::move(z));
}

LatticeClass LatticeClass::operator-() const {
  std::vector<std::int64_t> z(rep_);
  for (auto& v : z) v = -v;
  return LatticeClass(std::move(z));
}

std::size_t LatticeClass::Hash::operator()(const LatticeClass& c) const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the coordinates
  for (std::int64_t v : c.rep()) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<LatticeClass> generators(int n) {
  if (n < 2) throw InvalidParameters("generators: need n >= 2");
  std::vector<LatticeClass> out;
  for (int i = 0; i < n; ++i) {
    for (int sign : {1, -1}) {
      std::vector<std::int64_t> z(n, 0);
      z[i] = sign;
      LatticeClass c(std::move(z));
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
  }
  return out;
}

std::unordered_map<LatticeClass, int, LatticeClass::Hash> word_length_ball(int n, int K) {
  if (K < 0) throw InvalidParameters("word_length_ball: K must be non-negative");
  const auto gens = generators(n);
  std::unordered_map<LatticeClass, int, LatticeClass::Hash> dist;
  std::vector<LatticeClass> frontier{LatticeClass(std::vector<std::int64_t>(n, 0))};
  dist.emplace(frontier.front(), 0);
  for (int k = 1; k <= K; ++k) {
    std::vector<LatticeClass> next;
    for (const auto& c : frontier)
      for (const auto& g : gens) {
        LatticeClass d = c + g;
        if (dist.emplace(d, k).second) next.push_back(std::move(d));
      }
    frontier.swap(next);
  }
  return dist;
}

CoordinationSequence coordination_sequence(int n, int K) {
  const auto dist = word_length_ball(n, K);
  CoordinationSequence s{n, std::vector<BigInt>(static_cast<std::size_t>(K) + 1, 0)};
  for (const auto& [cls, d] : dist) s.values[d] += 1;
  return s;
}

IntPolynomial coordinator_from_sequence(int n, const CoordinationSequence& s) {
  if (n < 2) throw InvalidParameters("coordinator_from_sequence: need n >= 2");
  if (static_cast<int>(s.values.size()) < n)
    throw InvalidParameters("coordinator_from_sequence: need S(0) .. S(n-1)");
  std::vector<BigInt> h(n, 0);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= r; ++j) {
      BigInt term = binomial(n - 1, r - j) * s.values[j];
      if ((r - j) % 2) term = -term;
      h[r] += term;
    }
  IntPolynomial poly(std::move(h));
  const auto expanded = series_over_one_minus_x(poly, n - 1, s.values.size());
  for (std::size_t k = 0; k < s.values.size(); ++k)
    if (expanded[k] != s.values[k])
      throw InconsistentSequence("coordinator_from_sequence: S(" + std::to_string(k) + ") = " +
                                 s.values[k].get_str() + " but a degree-" + std::to_string(n - 1) +
                                 " numerator predicts " + expanded[k].get_str());
  return poly;
}

IntPolynomial coordinator_formula(int n, const BranchShift& shift) {
  if (n < 2) throw InvalidParameters("coordinator_formula: need n >= 2");
  std::vector<BigInt> h;
  for (int r = 0; r < n; ++r)
    h.push_back(r <= (n - 1) / 2 + shift.coord_split ? binomial_prefix_sum(n, r)
                                                      : binomial_prefix_sum(n, n - 1 - r));
  return IntPolynomial(std::move(h));
}

std::string to_oeis_text(const CoordinationSequence& s) { return join(s.values, ", "); }

nlohmann::json growth_to_json(const CoordinationSequence& s, const IntPolynomial& coordinator) {
  return {{"n", s.n}, {"S", big_to_json(s.values)}, {"coordinator", big_to_json(coordinator.padded(s.n))}};
}

}  // namespace hsimplex
