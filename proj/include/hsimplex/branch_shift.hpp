#pragma once

namespace hsimplex {

/// Offsets added to the branch boundaries of the closed-form counts.
///
/// All zero in normal use. A nonzero offset builds a deliberately wrong
/// variant of a formula; the verification sweep must reject every variant
/// whose values differ from the true formula.
struct BranchShift {
  int toric_first = 0;   // toric h: first branch is r <= k - 1 + toric_first
  int toric_middle = 0;  // toric h: middle branch ends at floor(n/2) + toric_middle
  int chow_first = 0;    // Chow-Betti: first branch is 1 <= r <= k + chow_first
  int chow_last = 0;     // Chow-Betti: last branch starts at n - k + chow_last
  int coord_split = 0;   // coordinator: first branch is r <= floor((n-1)/2) + coord_split

  bool any() const { return toric_first || toric_middle || chow_first || chow_last || coord_split; }
};

}  // namespace hsimplex
