#pragma once

// Closed-form counts over the symmetric group. All results are exact
// unbounded integers.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace evord {

struct InvariantCountInput {
  int n = 1;  // events
  int k = 1;  // set size (observers)
};

mpz_class factorial(int n);
mpz_class binomial(const mpz_class& n, unsigned long k);

/// |C(pi_r)| = floor(n/2)! * 2^floor(n/2).
mpz_class centralizer_order(int n);

/// Number of identity-containing k-subsets Q of S_n with pi_r Q pi_r = Q:
/// sum_{j=0}^{floor((k-1)/2)} C(c', j) * C(c-1, k-2j-1), c' = (n!-c)/2.
mpz_class invariant_set_count(const InvariantCountInput& in);

struct Order5Counts {
  mpz_class five_cycles;
  mpz_class subgroups;  // five_cycles / 4
};

/// Elements of order 5 and subgroups of order 5 in S_n, n in {5, 6}.
Order5Counts order5_subgroup_count(int n);

/// Translation classes of identity-containing k-subsets of S_n for k = 5,
/// n in {5, 6}: (C(n!-1, 4) - g)/5 + g with g order-5 subgroups.
mpz_class equivalence_class_count(int n, int k = 5);

/// All (n, m), 2 <= n <= n_max, 1 <= m <= m_max, with C(n,2) = 2^{m-1} - 1.
std::vector<std::pair<long, long>> diophantine_solutions(long n_max, long m_max);

}  // namespace evord
