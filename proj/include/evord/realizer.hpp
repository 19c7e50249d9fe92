#pragma once

// Constructive realization of five observers. Three moving observers are
// put on the coordinate axes at unit speed and see the events at the times
// of increasing schedules F_1..F_3 (the rest observer uses F_0). The fourth
// velocity u must then satisfy the strict "gap" inequalities A u + b > 0.
//
// Schedules only enter through their positive gaps h_i^(j) = F_j(i+1) - F_j(i),
// so the same builder runs over rationals, machine integers and symbolic
// polynomials in the gaps.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evord/error.hpp"
#include "evord/perm.hpp"
#include "evord/rational.hpp"
#include "evord/spacetime.hpp"

namespace evord {

/// F[j][i-1] = F_j(i), j = 0..3.
template <typename T>
struct BasicSchedule {
  std::array<std::vector<T>, 4> F;
  int n() const { return static_cast<int>(F[0].size()); }
};

using Schedule = BasicSchedule<Rational>;
using IntSchedule = BasicSchedule<long long>;

/// Throws Error unless all four sequences have the same length n >= 2 and
/// are strictly increasing.
void validate_schedule(const Schedule& s);
Schedule make_schedule(std::array<std::vector<Rational>, 4> F);
/// F_j(i) = slopes[j] * i.
Schedule linear_schedule(int n, const std::array<long, 4>& slopes);
/// The exact integer copy, when every value is an integer of modest size.
std::optional<IntSchedule> integral_schedule(const Schedule& s);

/// The default search order: linear slopes (1,300,200,300), two tabulated
/// schedules with one large jump per axis, then `random_count` seeded
/// pseudo-random integer schedules. Tables are extended by unit gaps for
/// n > 5.
std::vector<Schedule> builtin_schedules(int n, int random_count = 16);

template <typename T>
struct BasicGapSystem {
  std::vector<std::array<T, 3>> A;
  std::vector<T> b;
};

/// Which set and observers a gap system was built from. `translation`
/// indexes translations(set); `solved` (1..4) is the moving observer left
/// off the axes, the other three take axes 1..3 in sorted order.
struct GapProvenance {
  PermSet set;
  std::size_t schedule = 0;
  std::size_t translation = 0;
  int solved = 4;
};

struct GapSystem : BasicGapSystem<Rational> {
  GapProvenance provenance;
};

/// Events in the rest frame: times F_0(e) and spatial coordinates
/// w_{e,j} = F_0(e) - F_j(axes[j]^{-1}(e)); row i of the system is
/// g_i = b_i + a_i . u with b_i = t_{s(i+1)} - t_{s(i)} and
/// a_i = w_{s(i)} - w_{s(i+1)}, s the solved observer's sequence.
template <typename T>
BasicGapSystem<T> assemble_gap_system(const Permutation& solved,
                                      const std::array<Permutation, 3>& axes,
                                      const BasicSchedule<T>& s,
                                      std::vector<T>* times = nullptr,
                                      std::vector<std::array<T, 3>>* coords = nullptr) {
  const int n = solved.size();
  if (s.n() != n) throw SizeMismatch("schedule length differs from permutation size");
  std::vector<T> t(static_cast<std::size_t>(n));
  std::vector<std::array<T, 3>> w(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) {
    const auto idx = static_cast<std::size_t>(e - 1);
    t[idx] = s.F[0][idx];
    for (std::size_t j = 0; j < 3; ++j) {
      w[idx][j] = s.F[0][idx] - s.F[j + 1][static_cast<std::size_t>(axes[j].position_of(e) - 1)];
    }
  }
  BasicGapSystem<T> sys;
  for (int i = 1; i < n; ++i) {
    const auto e0 = static_cast<std::size_t>(solved(i) - 1);
    const auto e1 = static_cast<std::size_t>(solved(i + 1) - 1);
    sys.b.push_back(t[e1] - t[e0]);
    std::array<T, 3> row;
    for (std::size_t j = 0; j < 3; ++j) row[j] = w[e0][j] - w[e1][j];
    sys.A.push_back(row);
  }
  if (times) *times = std::move(t);
  if (coords) *coords = std::move(w);
  return sys;
}

template <typename T>
T det3(const std::array<T, 3>& r0, const std::array<T, 3>& r1, const std::array<T, 3>& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

/// D[k-1] = det of A with row k deleted; beta_d4 = b4 D4 - D1 b1 + D2 b2 - D3 b3.
template <typename T>
struct GapDeterminants {
  std::array<T, 4> D;
  T beta_d4;
};

template <typename T>
GapDeterminants<T> gap_determinants(const BasicGapSystem<T>& s) {
  if (s.A.size() != 4) throw Unsupported("gap determinants need exactly 4 rows");
  const auto& a = s.A;
  GapDeterminants<T> g;
  g.D[0] = det3(a[1], a[2], a[3]);
  g.D[1] = det3(a[0], a[2], a[3]);
  g.D[2] = det3(a[0], a[1], a[3]);
  g.D[3] = det3(a[0], a[1], a[2]);
  g.beta_d4 = s.b[3] * g.D[3] - g.D[0] * s.b[0] + g.D[1] * s.b[1] - g.D[2] * s.b[2];
  return g;
}

struct GapSolution {
  std::array<Rational, 3> alphas;
  Rational beta;
  bool singular = false;
};

/// Writes row 4 as alpha . (rows 1..3) and g_4 = sum alpha_i g_i + beta.
/// `singular` when rows 1..3 are dependent (D4 = 0).
GapSolution alpha_beta(const BasicGapSystem<Rational>& sys);

/// Some u with A u + b > 0 in every row, or nothing when the open
/// polyhedron is empty. Exact elimination; any number of columns.
std::optional<Velocity> fm_feasible(const std::vector<std::vector<Rational>>& A,
                                    const std::vector<Rational>& b);
std::optional<Velocity> fm_feasible(const BasicGapSystem<Rational>& sys);

struct GapBuild {
  GapSystem system;
  std::vector<Event> events;
  std::array<Permutation, 3> axes;
  Permutation solved;
};

/// Builds the system for translation `translation` of `q` (|q| = 5) with
/// moving observer `solved` (1..4) left off the axes. Checks that the three
/// axis observers see their orders.
GapBuild build_gap_system(const PermSet& q, const Schedule& s, int solved,
                          std::size_t translation = 0);

/// Three-way outcome of the alpha/beta test on one system.
enum class GapVerdict { Feasible, Singular, NonPositive };

/// Integer fast path of the alpha/beta test.
GapVerdict classify_gap_system(const Permutation& solved, const std::array<Permutation, 3>& axes,
                               const IntSchedule& s);

/// The 20 systems (translation x solved observer) of a 5-set under one
/// schedule, tried in order until one is alpha/beta-feasible.
struct StageResult {
  bool resolved = false;
  std::size_t translation = 0;
  int solved = 0;
  int singular = 0;     // systems with D4 = 0 seen before resolution
  int nonpositive = 0;  // systems with every alpha and beta <= 0
};

StageResult alpha_beta_stage(std::span<const Permutation> members, const IntSchedule& s);

struct Realization {
  Witness witness;
  std::string route;  // "axis", "alpha-beta" or "direct"
  std::size_t schedule = 0;
  std::size_t translation = 0;
  int solved = 0;
};

/// Witness for `members` from a feasible system: solves for u, relabels back,
/// normalizes and verifies (throws Error if verification fails).
Realization witness_from_system(const PermSet& q, const Schedule& s, std::size_t schedule_index,
                                std::size_t translation, int solved);

/// |q| <= 4: axis construction in 3 dimensions. |q| = 5: every schedule,
/// translation and solved observer in turn; alpha/beta first, exact
/// elimination when singular or n != 5. Nothing means inconclusive.
std::optional<Realization> realize_detailed(const PermSet& q, std::span<const Schedule> schedules);
std::optional<Witness> realize(const PermSet& q, std::span<const Schedule> schedules);

}  // namespace evord
