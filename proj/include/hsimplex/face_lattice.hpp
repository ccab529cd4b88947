#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsimplex/bigint.hpp"
#include "hsimplex/combinatorics.hpp"

namespace hsimplex {

/// Tag naming the isomorphism class of an element's lower interval. For face
/// lattices of hypersimplices (and their duals) this is (|I|, |J|) of the face
/// label F_{I,J}.
using StructureKey = std::pair<int, int>;

/// Finite graded poset with a least and a greatest element, stored through its
/// covering pairs.
///
/// Element ids are sorted by rank, so every cover (lo, hi) has lo < hi.
/// Construction checks gradedness and the bounds; the Eulerian condition is
/// a property checked by is_eulerian(). Instances are immutable.
class EulerianPoset {
 public:
  using Element = std::size_t;
  using Cover = std::pair<Element, Element>;

  EulerianPoset(std::vector<int> ranks, std::vector<Cover> covers,
                std::vector<std::optional<StructureKey>> keys = {},
                std::vector<std::optional<ConePair>> labels = {});

  std::size_t size() const { return ranks_.size(); }
  int rank(Element e) const { return ranks_.at(e); }
  /// rank(1^)
  int rank() const { return ranks_.back(); }
  Element bottom() const { return 0; }
  Element top() const { return size() - 1; }

  const std::vector<Element>& lower_covers(Element e) const { return down_.at(e); }
  const std::vector<Element>& upper_covers(Element e) const { return up_.at(e); }
  const std::optional<StructureKey>& key(Element e) const { return keys_.at(e); }
  const std::optional<ConePair>& label(Element e) const { return labels_.at(e); }
  std::vector<Cover> covers() const;

  /// {q : q <= e}, ascending ids.
  std::vector<Element> down_set(Element e) const;
  /// {q : q >= e}, ascending ids.
  std::vector<Element> up_set(Element e) const;
  bool leq(Element a, Element b) const;

  /// Element carrying this label, if any.
  std::optional<Element> find(ConePair label) const;

  nlohmann::json to_json() const;

  friend bool operator==(const EulerianPoset& a, const EulerianPoset& b);

 private:
  std::vector<int> ranks_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::optional<StructureKey>> keys_;
  std::vector<std::optional<ConePair>> labels_;
};

/// Face lattice of the hypersimplex Delta_{k,n}, 1 <= k <= n-1.
///
/// Elements: the empty face (rank 0), the vertices labelled (V, V^c) with
/// |V| = k (rank 1), and the faces F_{I,J} with I, J disjoint, |I| < k,
/// |J| < n-k, of rank n - |I| - |J|. F_{∅,∅} is the polytope itself.
EulerianPoset hypersimplex_face_poset(int k, int n);

/// Order dual: ranks become rank(1^) - rank, ids are reversed, labels and keys kept.
EulerianPoset dualize(const EulerianPoset& L);

/// f_r = number of elements of rank r + 1, for 0 <= r <= rank(L) - 2.
std::vector<BigInt> f_vector(const EulerianPoset& L);

/// True iff mu(p, q) = (-1)^{rank q - rank p} on every interval, with mu
/// evaluated by the Moebius recursion.
bool is_eulerian(const EulerianPoset& L);

/// [0^, p] as a poset of its own, ranks and tags inherited.
EulerianPoset lower_interval(const EulerianPoset& L, EulerianPoset::Element p);

}  // namespace hsimplex
