#pragma once

// Sign-pattern elimination for five observers in 3+1 dimensions.
//
// Four moving velocities in R^3 satisfy a linear dependence sum a_i v_i = 0,
// normalized so that A = sum a_i > 0. For an event pair (j,k) with j < k let
// I(j,k) be the moving observers that see k before j. The pattern with
// a_i > 0 exactly on I(j,k) makes every term of
//   0 < A (t_k - t_j) = sum a_i gamma_i^{-1} (t^(i)_k - t^(i)_j)
// negative, so that pattern is impossible. I(j,k) = {} gives the all-negative
// pattern, already excluded by A > 0. When the pairs hit every non-empty
// subset of the moving observers, no dependence can exist and the set of
// orderings is unrealizable.

#include <cstdint>
#include <span>
#include <vector>

#include "evord/perm.hpp"

namespace evord {

/// Bit i-1 set iff moving observer i (the i-th non-identity member in sorted
/// order) reverses the pair. Mask 0 is the trivial class.
struct SignClass {
  std::uint32_t mask = 0;
  int m = 0;  // moving observers

  bool trivial() const { return mask == 0; }
  friend bool operator==(const SignClass&, const SignClass&) = default;
};

SignClass pair_sign_class(const PermSet& q, PairIndex pair);

struct SignReport {
  int m = 0;
  std::vector<std::pair<PairIndex, SignClass>> table;  // one row per event pair
  std::vector<std::uint32_t> never_eliminated;          // non-trivial masks not hit
  bool unrealizable = false;
};

/// Requires a canonical set (identity present) with |Q| = 5.
SignReport sign_report(const PermSet& q);
bool sign_unrealizable(const PermSet& q);

/// Bit p set iff the p-th pair of all_pairs(n) is reversed by `p`.
std::uint32_t pair_reversal_bits(const Permutation& p);

/// Table-driven core: member_bits are pair_reversal_bits of the moving
/// observers. True iff every non-zero mask over them is produced by a pair.
bool covers_all_sign_patterns(std::span<const std::uint32_t> member_bits, int pair_count);

}  // namespace evord
