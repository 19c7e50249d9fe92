#pragma once

// Symbolic unrealizability certificate for the cyclic set Q0 generated by
// (2,3,4,5,1). With gaps h_i^(j) > 0 as variables, the gap matrix of Q0 has
// minors D1, D3 with only negative terms and D2, D4 with only positive
// terms, and beta * D4 has only negative terms. Hence every alpha_i and beta
// is negative for every schedule and no fourth velocity exists.

#include <array>
#include <string>

#include "evord/perm.hpp"
#include "evord/polynomial.hpp"
#include "evord/realizer.hpp"

namespace evord {

/// {(1,2,3,4,5),(2,3,4,5,1),(3,4,5,1,2),(4,5,1,2,3),(5,1,2,3,4)}
PermSet cyclic_q0();

/// F_j(i) = h_1^(j) + ... + h_{i-1}^(j), so F_j(1) = 0.
BasicSchedule<Polynomial> symbolic_schedule(int n);

using SymbolicGapSystem = BasicGapSystem<Polynomial>;

/// Closed-form entries from the cyclic structure, with k = (i - j) mod 5 in
/// 1..5:  k = 1: -sum_l h_l^(j) - h_{i-1}^(0);  i = 1: h_{k-1}^(j) + sum_l h_l^(0);
/// otherwise h_{k-1}^(j) - h_{i-1}^(0).
SymbolicGapSystem build_symbolic_gap_matrix();

/// The same matrix through the generic builder (solved observer (5,1,2,3,4)).
SymbolicGapSystem generic_symbolic_gap_matrix();

struct PolySummary {
  std::size_t terms = 0;
  int sign = 0;           // +1 all positive, -1 all negative, 0 mixed
  bool unit = false;      // every coefficient is +1 or every one is -1
  std::string verdict() const;
};

PolySummary summarize(const Polynomial& p);

struct CertificateReport {
  std::array<Polynomial, 4> D;
  Polynomial beta_d4;
  std::array<PolySummary, 4> D_summary;
  PolySummary beta_summary;
  bool matrices_agree = false;   // closed form equals generic construction
  bool linear_relation = false;  // D1 a1 - D2 a2 + D3 a3 - D4 a4 == 0
  bool conclusion = false;

  std::string str() const;
  /// Expanded polynomials, one term per line, in canonical order.
  std::string dump() const;
};

CertificateReport certify_q0();

/// Some choice of five events, restricted and relabeled, turns `q` into a
/// translate of Q0. Such sets are unrealizable.
bool contains_q0_minor(const PermSet& q);

}  // namespace evord
