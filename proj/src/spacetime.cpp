#include "evord/spacetime.hpp"

#include <algorithm>
#include <numeric>

#include "evord/error.hpp"

namespace evord {

Rational Velocity::squared_speed() const { return dot(components, components); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].value() * b[i].value();
  return Rational(acc);
}

Rational relativized_time(const Event& e, const Velocity& v) {
  return e.t - dot(v.components, e.w);
}

Permutation observed_order(std::span<const Event> events, const Velocity& v) {
  const int n = static_cast<int>(events.size());
  std::vector<Rational> times;
  times.reserve(events.size());
  for (const auto& e : events) times.push_back(relativized_time(e, v));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return times[static_cast<std::size_t>(a - 1)] < times[static_cast<std::size_t>(b - 1)];
  });
  for (int i = 1; i < n; ++i) {
    const auto a = static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)] - 1);
    const auto b = static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - 1);
    if (times[a] == times[b]) {
      throw DegenerateOrdering("events " + std::to_string(a + 1) + " and " +
                               std::to_string(b + 1) + " are simultaneous at relativized time " +
                               times[a].str());
    }
  }
  return Permutation(order);
}

VerifyResult verify_witness(const Witness& w) {
  if (w.velocities.size() != w.claim.size()) {
    return {false, "velocity count " + std::to_string(w.velocities.size()) +
                       " differs from claim size " + std::to_string(w.claim.size())};
  }
  if (w.claim.size() > 0 && static_cast<int>(w.events.size()) != w.claim.n()) {
    return {false, "event count differs from permutation size"};
  }
  const int d = w.dimension();
  for (const auto& e : w.events) {
    if (e.dimension() != d) return {false, "events have mixed dimensions"};
  }
  const Rational one(1);
  for (std::size_t i = 0; i < w.velocities.size(); ++i) {
    const auto& v = w.velocities[i];
    if (v.dimension() != d) return {false, "observer " + std::to_string(i) + " has wrong dimension"};
    if (!(v.squared_speed() < one)) {
      return {false, "observer " + std::to_string(i) + " is not slower than light (v.v = " +
                         v.squared_speed().str() + ")"};
    }
    try {
      const auto seen = observed_order(w.events, v);
      if (seen != w.claim.members()[i]) {
        return {false, "observer " + std::to_string(i) + " sees " + seen.str() + ", claimed " +
                           w.claim.members()[i].str()};
      }
    } catch (const DegenerateOrdering& err) {
      return {false, "observer " + std::to_string(i) + ": " + err.what()};
    }
  }
  return {true, {}};
}

Witness normalize_witness(const Witness& w, const Rational& factor) {
  if (factor.sign() <= 0) throw Error("normalization factor must be positive");
  Witness out = w;
  for (auto& e : out.events) {
    for (auto& x : e.w) x *= factor;
  }
  for (auto& v : out.velocities) {
    for (auto& x : v.components) x /= factor;
  }
  return out;
}

Rational auto_normalizer(const Witness& w) {
  Rational max_sq(0);
  for (const auto& v : w.velocities) max_sq = std::max(max_sq, v.squared_speed());
  Rational n(1);
  while (!(n * n > max_sq)) n *= Rational(2);
  return n;
}

Witness normalize_witness(const Witness& w) { return normalize_witness(w, auto_normalizer(w)); }

Witness relabel_witness(const Witness& w, const Permutation& lambda) {
  const int n = static_cast<int>(w.events.size());
  if (lambda.size() != n) throw SizeMismatch("relabel_witness: label map has wrong size");
  Witness out;
  out.events.resize(w.events.size());
  // New label q is old label lambda(q).
  for (int q = 1; q <= n; ++q) {
    out.events[static_cast<std::size_t>(q - 1)] = w.events[static_cast<std::size_t>(lambda(q) - 1)];
  }
  const auto lambda_inv = inverse(lambda);
  std::vector<std::pair<Permutation, Velocity>> seen;
  for (std::size_t i = 0; i < w.velocities.size(); ++i) {
    seen.emplace_back(compose(lambda_inv, w.claim.members()[i]), w.velocities[i]);
  }
  std::sort(seen.begin(), seen.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Permutation> claim;
  for (auto& [p, v] : seen) {
    claim.push_back(p);
    out.velocities.push_back(std::move(v));
  }
  out.claim = PermSet(std::move(claim));
  return out;
}

Witness rebase_witness(const Witness& w, std::size_t observer) {
  Witness out = w;
  const Velocity shift = w.velocities.at(observer);
  for (auto& e : out.events) e.t = relativized_time(e, shift);
  for (auto& v : out.velocities) {
    for (std::size_t c = 0; c < v.components.size(); ++c) v.components[c] -= shift.components[c];
  }
  return out;
}

Witness SimplexConstruction::witness_for(const PermSet& claim) const {
  Witness w;
  w.events = events;
  w.claim = claim;
  for (const auto& p : claim.members()) {
    const auto it = velocities.find(p);
    if (it == velocities.end()) throw Error("permutation " + p.str() + " has wrong size");
    w.velocities.push_back(it->second);
  }
  return w;
}

SimplexConstruction build_simplex_witness(int n) {
  if (n < 1 || n + 1 > Permutation::kMaxSize) throw Error("build_simplex_witness: bad dimension");
  SimplexConstruction out;
  out.dimension = n;
  out.scale = Rational(2L * n * n * n);
  for (int i = 1; i <= n + 1; ++i) {
    Event e{Rational(i), std::vector<Rational>(static_cast<std::size_t>(n))};
    if (i >= 2) e.w[static_cast<std::size_t>(i - 2)] = Rational(1);
    out.raw_events.push_back(e);
    for (auto& x : e.w) x *= out.scale;
    out.events.push_back(std::move(e));
  }
  for (const auto& sigma : all_permutations(n + 1)) {
    // Component i: i + sigma^{-1}(1) - sigma^{-1}(i+1).
    Velocity raw = Velocity::zero(n);
    const int first = sigma.position_of(1);
    for (int i = 1; i <= n; ++i) {
      raw.components[static_cast<std::size_t>(i - 1)] = Rational(i + first - sigma.position_of(i + 1));
    }
    Velocity scaled = raw;
    for (auto& x : scaled.components) x /= out.scale;
    out.raw_velocities.emplace(sigma, std::move(raw));
    out.velocities.emplace(sigma, std::move(scaled));
  }
  return out;
}

Witness build_axis_witness(const PermSet& q, std::span<const Rational> speeds) {
  const auto d = speeds.size();
  if (q.size() == 0 || !q.contains_identity()) {
    throw Error("build_axis_witness: set must contain the identity");
  }
  if (q.size() > d + 1) {
    throw Unsupported("build_axis_witness: " + std::to_string(q.size()) +
                      " observers exceed d+1 = " + std::to_string(d + 1) +
                      "; use the realizer for larger sets");
  }
  for (const auto& s : speeds) {
    if (s.sign() <= 0 || !(s < Rational(1))) throw Error("axis speeds must lie in (0,1)");
  }
  const int n = q.n();
  Witness w;
  w.claim = q;
  for (int i = 1; i <= n; ++i) {
    Event e{Rational(i), std::vector<Rational>(d)};
    // Observer j sees E_i at relativized time sigma_j^{-1}(i).
    for (std::size_t j = 1; j < q.size(); ++j) {
      const auto& sigma = q.members()[j];
      e.w[j - 1] = Rational(i - sigma.position_of(i)) / speeds[j - 1];
    }
    w.events.push_back(std::move(e));
  }
  w.velocities.push_back(Velocity::zero(static_cast<int>(d)));
  for (std::size_t j = 1; j < q.size(); ++j) {
    Velocity v = Velocity::zero(static_cast<int>(d));
    v.components[j - 1] = speeds[j - 1];
    w.velocities.push_back(std::move(v));
  }
  return w;
}

Witness build_1d_pair_witness(const Permutation& sigma) {
  const int n = sigma.size();
  Witness w;
  for (int i = 1; i <= n; ++i) {
    w.events.push_back(Event{Rational(i), {Rational(2 * (i - sigma.position_of(i)))}});
  }
  const auto id = Permutation::identity(n);
  if (sigma == id) {
    w.claim = PermSet({id});
    w.velocities.push_back(Velocity::zero(1));
    return w;
  }
  w.claim = PermSet({id, sigma});
  w.velocities.push_back(Velocity::zero(1));
  w.velocities.push_back(Velocity{{Rational(1, 2)}});
  return w;
}

}  // namespace evord
