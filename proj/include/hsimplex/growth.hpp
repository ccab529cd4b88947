#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsimplex/bigint.hpp"
#include "hsimplex/branch_shift.hpp"
#include "hsimplex/polynomial.hpp"

namespace hsimplex {

/// Point of the A_{n-1}^* lattice, modelled as Z^n modulo the all-ones vector.
/// The representative is normalised so its coordinate sum lies in [0, n-1].
class LatticeClass {
 public:
  explicit LatticeClass(std::vector<std::int64_t> z);

  const std::vector<std::int64_t>& rep() const { return rep_; }
  int dimension() const { return static_cast<int>(rep_.size()); }
  bool is_zero() const;

  LatticeClass operator+(const LatticeClass& o) const;
  LatticeClass operator-() const;
  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;

  struct Hash {
    std::size_t operator()(const LatticeClass& c) const;
  };

 private:
  std::vector<std::int64_t> rep_;
};

/// Classes of +-e_1, ..., +-e_n, deduplicated (2n of them for n >= 3).
std::vector<LatticeClass> generators(int n);

struct CoordinationSequence {
  int n = 0;
  std::vector<BigInt> values;  // S(0), ..., S(K)
};

/// Word-length distance from the origin for every class within distance K.
std::unordered_map<LatticeClass, int, LatticeClass::Hash> word_length_ball(int n, int K);

/// S(k) = number of classes at word length exactly k, 0 <= k <= K, by
/// breadth-first search over the Cayley graph of the shortest vectors.
CoordinationSequence coordination_sequence(int n, int K);

class InconsistentSequence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerator h(x) of sum S(k) x^k = h(x) / (1 - x)^{n-1}, from S(0..n-1).
/// Every further supplied S(k) must match the expansion, otherwise throws
/// InconsistentSequence.
IntPolynomial coordinator_from_sequence(int n, const CoordinationSequence& s);

/// Closed form for the coordinator numbers h_0 .. h_{n-1} of A_{n-1}^*.
IntPolynomial coordinator_formula(int n, const BranchShift& shift = {});

/// "1, 6, 12, 18"
std::string to_oeis_text(const CoordinationSequence& s);
/// {"n": n, "S": [...], "coordinator": [...]}
nlohmann::json growth_to_json(const CoordinationSequence& s, const IntPolynomial& coordinator);

}  // namespace hsimplex
