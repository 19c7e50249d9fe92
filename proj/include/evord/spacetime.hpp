#pragma once

// Exact Minkowski kernel. Only time ordering is modelled: an observer with
// velocity v (relative to the rest frame) orders events by the relativized
// time t - v.w, which differs from its Lorentz time by the factor gamma > 0.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "evord/perm.hpp"
#include "evord/rational.hpp"

namespace evord {

struct Event {
  Rational t;
  std::vector<Rational> w;  // spatial coordinates in the rest frame

  int dimension() const { return static_cast<int>(w.size()); }
  friend bool operator==(const Event&, const Event&) = default;
};

struct Velocity {
  std::vector<Rational> components;

  static Velocity zero(int d) { return {std::vector<Rational>(static_cast<std::size_t>(d))}; }
  int dimension() const { return static_cast<int>(components.size()); }
  Rational squared_speed() const;
  friend bool operator==(const Velocity&, const Velocity&) = default;
};

/// A claimed realization: velocities[i] is the observer that sees
/// claim.members()[i].
struct Witness {
  std::vector<Event> events;
  std::vector<Velocity> velocities;
  PermSet claim;

  int dimension() const { return events.empty() ? 0 : events.front().dimension(); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// e.t - v . e.w
Rational relativized_time(const Event& e, const Velocity& v);

/// The sequence of event labels in increasing relativized time. Throws
/// DegenerateOrdering on ties.
Permutation observed_order(std::span<const Event> events, const Velocity& v);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Every observer sees its claimed order and moves slower than light.
VerifyResult verify_witness(const Witness& w);

/// Velocities divided by `factor`, spatial coordinates multiplied by it.
Witness normalize_witness(const Witness& w, const Rational& factor);
/// Smallest power of two N >= 1 with N^2 > max squared speed.
Rational auto_normalizer(const Witness& w);
Witness normalize_witness(const Witness& w);

/// Events relabeled so that the result realizes lambda^{-1} o Q for the
/// claim Q of `w`; velocities follow their observers.
Witness relabel_witness(const Witness& w, const Permutation& lambda);

/// Moves the rest frame to `observer` by shifting every velocity by its
/// velocity and every event time by -v.w. Relativized times are unchanged.
Witness rebase_witness(const Witness& w, std::size_t observer);

struct SimplexConstruction {
  int dimension = 0;
  Rational scale;                                     // 2 n^3
  std::vector<Event> raw_events;                      // E_1 = 0, E_i = e_{i-1}
  std::vector<Event> events;                          // spatial parts * scale
  std::map<Permutation, Velocity> raw_velocities;    // integer formula
  std::map<Permutation, Velocity> velocities;        // raw / scale

  /// Witness for any subset of S_{n+1}; the identity member is optional.
  Witness witness_for(const PermSet& claim) const;
};

/// n+1 events in n spatial dimensions seen in every order of S_{n+1}.
SimplexConstruction build_simplex_witness(int n);

/// Rest observer plus observers j = 1..|Q|-1 moving along axis e_j at
/// speeds[j-1]; realizes any Q containing the identity with |Q| <= d+1,
/// d = speeds.size().
Witness build_axis_witness(const PermSet& q, std::span<const Rational> speeds);

/// Events t_i = i, x_i = 2(i - sigma^{-1}(i)) and observers {0, 1/2} on a
/// line, realizing {identity, sigma}.
Witness build_1d_pair_witness(const Permutation& sigma);

}  // namespace evord
