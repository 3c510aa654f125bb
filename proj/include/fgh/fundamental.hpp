#pragma once

#include "fgh/nat.hpp"
#include "fgh/ordinal.hpp"

namespace fgh {

// x-th member of the standard fundamental sequence assigned to the limit
// ordinal `gamma`.  Throws NotALimit when `gamma` is zero or a successor,
// NotFinite when `x` is negative, and DepthExceeded when gamma is epsilon0
// and x exceeds `max_tower`.
Ordinal fund_seq(const Ordinal& gamma, const Nat& x, unsigned max_tower = kDefaultTowerDepth);

// Checks gamma[mc(beta) + 1] > beta, for limit gamma and beta < gamma, both
// below epsilon0: the inequality that lets a derivation overshoot any given
// smaller ordinal by diagonalizing far enough.
bool notice1_holds(const Ordinal& gamma, const Ordinal& beta,
                   unsigned max_tower = kDefaultTowerDepth);

}  // namespace fgh
