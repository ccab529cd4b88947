#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hsimplex/bigint.hpp"
#include "hsimplex/branch_shift.hpp"
#include "hsimplex/face_lattice.hpp"
#include "hsimplex/polynomial.hpp"

namespace hsimplex {

class NotEulerian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// h_0 ... h_d of a d-polytope.
struct HVector {
  std::vector<BigInt> entries;

  std::size_t size() const { return entries.size(); }
  const BigInt& operator[](std::size_t i) const { return entries.at(i); }
  std::string to_string() const { return join(entries); }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Toric h-polynomial of an Eulerian poset by Stanley's g/h recursion:
/// h(L) = sum over p != 1^ of g([0^, p]) (x - 1)^{rank L - rank p - 1}.
///
/// g is computed once per lower interval; intervals whose tops carry the same
/// structure key share one computation. Throws NotEulerian.
IntPolynomial toric_h_poly(const EulerianPoset& L);

/// Truncated difference transform of toric_h_poly(L) up to degree floor(d/2).
IntPolynomial toric_g_poly(const EulerianPoset& L);

/// g-polynomial attached to an h-polynomial of a rank-`rank` poset.
IntPolynomial g_from_h(const IntPolynomial& h, int rank);

/// h-vector (h_0 .. h_d) padded to length rank(L).
HVector toric_h_vector(const EulerianPoset& L);

/// Usual h-vector from f = (f_0 .. f_{d-1}): the coefficients of
/// sum_{i=0}^{d} f_{i-1} (x-1)^{d-i} (f_{-1} = 1), read as h_0 x^d + ... + h_d.
HVector usual_h_from_f(const std::vector<BigInt>& f, int d);

/// Closed form for the toric h-vector of the dual hypersimplex, 1 <= k <= n/2.
/// Returns h_0 .. h_{n-1}.
HVector toric_h_formula(int k, int n, const BranchShift& shift = {});

}  // namespace hsimplex
