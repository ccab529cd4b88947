#include "hsimplex/face_lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hsimplex {

namespace {

// Collects everything reachable from `start` through `adjacency`, ascending ids.
std::vector<std::size_t> reachable(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t start) {
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<std::size_t> stack{start}, out;
  seen[start] = 1;
  while (!stack.empty()) {
    const std::size_t e = stack.back();
    stack.pop_back();
    out.push_back(e);
    for (std::size_t f : adjacency[e])
      if (!seen[f]) {
        seen[f] = 1;
        stack.push_back(f);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

EulerianPoset::EulerianPoset(std::vector<int> ranks, std::vector<Cover> covers,
                             std::vector<std::optional<StructureKey>> keys,
                             std::vector<std::optional<ConePair>> labels)
    : ranks_(std::move(ranks)), keys_(std::move(keys)), labels_(std::move(labels)) {
  const std::size_t n = ranks_.size();
  if (n == 0) throw std::invalid_argument("EulerianPoset: empty poset");
  if (keys_.empty()) keys_.resize(n);
  if (labels_.empty()) labels_.resize(n);
  if (keys_.size() != n || labels_.size() != n)
    throw std::invalid_argument("EulerianPoset: keys/labels size mismatch");
  if (ranks_[0] != 0) throw std::invalid_argument("EulerianPoset: element 0 must have rank 0");
  for (std::size_t i = 1; i < n; ++i)
    if (ranks_[i] < ranks_[i - 1]) throw std::invalid_argument("EulerianPoset: ids must be sorted by rank");

  down_.resize(n);
  up_.resize(n);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::invalid_argument("EulerianPoset: cover references unknown element");
    if (ranks_[hi] != ranks_[lo] + 1) throw std::invalid_argument("EulerianPoset: cover must raise rank by one");
    down_[hi].push_back(lo);
    up_[lo].push_back(hi);
  }
  for (std::size_t e = 0; e < n; ++e) {
    std::sort(down_[e].begin(), down_[e].end());
    std::sort(up_[e].begin(), up_[e].end());
    if (std::adjacent_find(down_[e].begin(), down_[e].end()) != down_[e].end())
      throw std::invalid_argument("EulerianPoset: duplicate cover");
    if (e != 0 && down_[e].empty()) throw std::invalid_argument("EulerianPoset: more than one minimal element");
    if (e != n - 1 && up_[e].empty()) throw std::invalid_argument("EulerianPoset: more than one maximal element");
  }
}

std::vector<EulerianPoset::Cover> EulerianPoset::covers() const {
  std::vector<Cover> out;
  for (std::size_t hi = 0; hi < size(); ++hi)
    for (std::size_t lo : down_[hi]) out.emplace_back(lo, hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EulerianPoset::Element> EulerianPoset::down_set(Element e) const { return reachable(down_, e); }
std::vector<EulerianPoset::Element> EulerianPoset::up_set(Element e) const { return reachable(up_, e); }

bool EulerianPoset::leq(Element a, Element b) const {
  if (a == b) return true;
  if (ranks_.at(a) >= ranks_.at(b)) return false;
  const auto d = down_set(b);
  return std::binary_search(d.begin(), d.end(), a);
}

std::optional<EulerianPoset::Element> EulerianPoset::find(ConePair label) const {
  for (std::size_t e = 0; e < size(); ++e)
    if (labels_[e] && *labels_[e] == label) return e;
  return std::nullopt;
}

nlohmann::json EulerianPoset::to_json() const {
  nlohmann::json elements = nlohmann::json::array();
  for (std::size_t e = 0; e < size(); ++e) {
    nlohmann::json item{{"id", e}, {"rank", ranks_[e]}};
    item["key"] = keys_[e] ? nlohmann::json::array({keys_[e]->first, keys_[e]->second}) : nlohmann::json();
    item["label"] = labels_[e] ? nlohmann::json{{"I", labels_[e]->I.elements()}, {"J", labels_[e]->J.elements()}}
                               : nlohmann::json();
    elements.push_back(std::move(item));
  }
  nlohmann::json covers_json = nlohmann::json::array();
  for (auto [lo, hi] : covers()) covers_json.push_back({lo, hi});
  return {{"elements", std::move(elements)}, {"covers", std::move(covers_json)}};
}

bool operator==(const EulerianPoset& a, const EulerianPoset& b) {
  return a.ranks_ == b.ranks_ && a.down_ == b.down_ && a.keys_ == b.keys_ && a.labels_ == b.labels_;
}

EulerianPoset hypersimplex_face_poset(int k, int n) {
  if (n < 2 || n > 31 || k < 1 || k > n - 1)
    throw InvalidParameters("hypersimplex_face_poset: need 2 <= n <= 31 and 1 <= k <= n-1");
  const IndexSet full = IndexSet::full(n);
  std::vector<int> ranks;
  std::vector<std::optional<StructureKey>> keys;
  std::vector<std::optional<ConePair>> labels;
  std::unordered_map<std::uint64_t, std::size_t> id_of;

  auto add = [&](int rank, std::optional<ConePair> label) {
    if (label) {
      id_of.emplace(label->key(), ranks.size());
      keys.emplace_back(StructureKey{label->I.size(), label->J.size()});
    } else {
      keys.emplace_back(std::nullopt);
    }
    ranks.push_back(rank);
    labels.push_back(label);
  };

  add(0, std::nullopt);
  for (IndexSet V : k_subsets(n, k)) add(1, ConePair{V, full.minus(V)});
  // Rank n - |I| - |J| for |I| < k and |J| < n - k; edges first, polytope last.
  for (int rank = 2; rank <= n; ++rank) {
    const int s = n - rank;
    for (int a = std::min(k - 1, s); a >= 0; --a) {
      if (s - a > n - k - 1) break;
      for (IndexSet I : k_subsets(n, a))
        for (IndexSet J : k_subsets_of(full.minus(I), s - a)) add(rank, ConePair{I, J});
    }
  }

  std::vector<EulerianPoset::Cover> covers;
  for (std::size_t e = 0; e < ranks.size(); ++e) {
    if (ranks[e] == 0) continue;
    const auto [I, J] = *labels[e];
    if (ranks[e] == 1) {
      covers.emplace_back(0, e);
      for (int x : I.elements())
        for (int y : J.elements()) covers.emplace_back(e, id_of.at(ConePair{I.without(x), J.without(y)}.key()));
      continue;
    }
    for (int x : I.elements()) covers.emplace_back(e, id_of.at(ConePair{I.without(x), J}.key()));
    for (int y : J.elements()) covers.emplace_back(e, id_of.at(ConePair{I, J.without(y)}.key()));
  }
  return EulerianPoset(std::move(ranks), std::move(covers), std::move(keys), std::move(labels));
}

EulerianPoset dualize(const EulerianPoset& L) {
  const std::size_t n = L.size();
  const int top = L.rank();
  std::vector<int> ranks(n);
  std::vector<std::optional<StructureKey>> keys(n);
  std::vector<std::optional<ConePair>> labels(n);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t d = n - 1 - e;
    ranks[d] = top - L.rank(e);
    keys[d] = L.key(e);
    labels[d] = L.label(e);
  }
  std::vector<EulerianPoset::Cover> covers;
  for (auto [lo, hi] : L.covers()) covers.emplace_back(n - 1 - hi, n - 1 - lo);
  return EulerianPoset(std::move(ranks), std::move(covers), std::move(keys), std::move(labels));
}

std::vector<BigInt> f_vector(const EulerianPoset& L) {
  std::vector<BigInt> f(std::max(0, L.rank() - 1), 0);
  for (std::size_t e = 0; e < L.size(); ++e) {
    const int r = L.rank(e) - 1;
    if (r >= 0 && r < static_cast<int>(f.size())) f[r] += 1;
  }
  return f;
}

bool is_eulerian(const EulerianPoset& L) {
  const std::size_t n = L.size();
  std::vector<std::size_t> local(n, 0);
  std::vector<std::int64_t> mu;
  std::vector<std::uint64_t> above;  // bit rows: w strictly above q inside [., z]
  for (std::size_t z = 0; z < n; ++z) {
    const auto D = L.down_set(z);
    const std::size_t m = D.size();
    const std::size_t words = (m + 63) / 64;
    for (std::size_t i = 0; i < m; ++i) local[D[i]] = i;
    mu.assign(m, 0);
    above.assign(m * words, 0);
    // Descending ids visit [q, z] top-down, so every w > q is already settled.
    for (std::size_t qi = m; qi-- > 0;) {
      const std::size_t q = D[qi];
      std::uint64_t* row = &above[qi * words];
      if (q != z) {
        for (std::size_t c : L.upper_covers(q)) {
          const std::size_t ci = local[c];
          if (ci >= m || D[ci] != c) continue;  // c lies outside [0^, z]
          row[ci / 64] |= std::uint64_t{1} << (ci % 64);
          const std::uint64_t* crow = &above[ci * words];
          for (std::size_t w = 0; w < words; ++w) row[w] |= crow[w];
        }
      }
      std::int64_t sum = 0;
      for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) sum += mu[w * 64 + std::countr_zero(bits)];
      mu[qi] = (q == z) ? 1 : -sum;
      const std::int64_t expected = ((L.rank(z) - L.rank(q)) % 2) ? -1 : 1;
      if (mu[qi] != expected) return false;
    }
  }
  return true;
}

EulerianPoset lower_interval(const EulerianPoset& L, EulerianPoset::Element p) {
  const auto D = L.down_set(p);
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < D.size(); ++i) local.emplace(D[i], i);
  std::vector<int> ranks;
  std::vector<std::optional<StructureKey>> keys;
  std::vector<std::optional<ConePair>> labels;
  std::vector<EulerianPoset::Cover> covers;
  for (std::size_t i = 0; i < D.size(); ++i) {
    ranks.push_back(L.rank(D[i]));
    keys.push_back(L.key(D[i]));
    labels.push_back(L.label(D[i]));
    for (std::size_t lo : L.lower_covers(D[i])) covers.emplace_back(local.at(lo), i);
  }
  return EulerianPoset(std::move(ranks), std::move(covers), std::move(keys), std::move(labels));
}

}  // namespace hsimplex
