#include "evord/realizer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace evord {

namespace {

using Wide = __int128;

int sign_of(Wide x) { return (x > 0) - (x < 0); }

std::array<Permutation, 5> sorted_translation(std::span<const Permutation> members, std::size_t s) {
  const auto lambda = inverse(members[s]);
  std::array<Permutation, 5> t;
  for (std::size_t k = 0; k < 5; ++k) t[k] = compose(lambda, members[k]);
  std::sort(t.begin(), t.end());
  return t;
}

// Moving observers t[1..4]; `solved` is left off the axes.
std::array<Permutation, 3> axes_without(const std::array<Permutation, 5>& t, int solved) {
  std::array<Permutation, 3> axes;
  std::size_t k = 0;
  for (int m = 1; m <= 4; ++m) {
    if (m != solved) axes[k++] = t[static_cast<std::size_t>(m)];
  }
  return axes;
}

struct Inequality {
  std::vector<Rational> a;  // a . x + b > 0
  Rational b;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// Divides by the largest |coefficient| so parallel rows compare equal.
void scale_down(Inequality& row) {
  Rational m(0);
  for (const auto& x : row.a) {
    const Rational ax = x.sign() < 0 ? -x : x;
    if (ax > m) m = ax;
  }
  if (m.is_zero()) return;
  for (auto& x : row.a) x /= m;
  row.b /= m;
}

// Projects out variable v. Returns false if a constant row is violated.
bool eliminate(const std::vector<Inequality>& rows, std::size_t v, std::vector<Inequality>& out) {
  std::vector<const Inequality*> pos, neg;
  std::vector<Inequality> next;
  for (const auto& r : rows) {
    const int s = r.a[v].sign();
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else {
      next.push_back(r);
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      // p: a_p x_v > -(rest_p), q: -|a_q| x_v > -(rest_q); positive combination.
      const Rational cp = -q->a[v];
      const Rational cq = p->a[v];
      Inequality r;
      r.a.resize(p->a.size());
      for (std::size_t l = 0; l < r.a.size(); ++l) r.a[l] = cp * p->a[l] + cq * q->a[l];
      r.a[v] = Rational(0);
      r.b = cp * p->b + cq * q->b;
      next.push_back(std::move(r));
    }
  }
  out.clear();
  // Keep the tightest constant for each direction.
  std::map<std::vector<Rational>, Rational> tight;
  for (auto& r : next) {
    scale_down(r);
    const bool constant = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x.is_zero(); });
    if (constant) {
      if (r.b.sign() <= 0) return false;
      continue;
    }
    auto [it, inserted] = tight.try_emplace(r.a, r.b);
    if (!inserted && r.b < it->second) it->second = r.b;
  }
  for (auto& [a, b] : tight) out.push_back(Inequality{a, b});
  return true;
}

std::vector<Event> to_events(const std::vector<Rational>& t, const std::vector<std::array<Rational, 3>>& w) {
  std::vector<Event> events;
  for (std::size_t e = 0; e < t.size(); ++e) events.push_back(Event{t[e], {w[e][0], w[e][1], w[e][2]}});
  return events;
}

Velocity unit(std::size_t j) {
  Velocity v = Velocity::zero(3);
  v.components[j] = Rational(1);
  return v;
}

}  // namespace

void validate_schedule(const Schedule& s) {
  const auto n = s.F[0].size();
  if (n < 2) throw Error("schedule needs at least two entries");
  for (std::size_t j = 0; j < 4; ++j) {
    if (s.F[j].size() != n) throw SizeMismatch("schedule sequences differ in length");
    for (std::size_t i = 1; i < n; ++i) {
      if (!(s.F[j][i - 1] < s.F[j][i])) {
        throw Error("schedule F_" + std::to_string(j) + " is not strictly increasing at " +
                    std::to_string(i + 1));
      }
    }
  }
}

Schedule make_schedule(std::array<std::vector<Rational>, 4> F) {
  Schedule s{std::move(F)};
  validate_schedule(s);
  return s;
}

Schedule linear_schedule(int n, const std::array<long, 4>& slopes) {
  Schedule s;
  for (std::size_t j = 0; j < 4; ++j) {
    for (int i = 1; i <= n; ++i) s.F[j].push_back(Rational(slopes[j] * i));
  }
  validate_schedule(s);
  return s;
}

std::optional<IntSchedule> integral_schedule(const Schedule& s) {
  constexpr long kLimit = 1L << 20;  // keeps determinants inside 128 bits
  IntSchedule out;
  for (std::size_t j = 0; j < 4; ++j) {
    for (const auto& x : s.F[j]) {
      if (x.denominator() != 1 || !x.numerator().fits_slong_p()) return std::nullopt;
      const long v = x.numerator().get_si();
      if (v > kLimit || v < -kLimit) return std::nullopt;
      out.F[j].push_back(v);
    }
  }
  return out;
}

std::vector<Schedule> builtin_schedules(int n, int random_count) {
  if (n < 2) throw Error("builtin_schedules: n must be at least 2");
  auto table = [n](std::vector<long> v) {
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) {
      out.push_back(i < static_cast<int>(v.size()) ? Rational(v[static_cast<std::size_t>(i)])
                                                   : out.back() + Rational(1));
    }
    return out;
  };
  std::vector<Schedule> list;
  list.push_back(linear_schedule(n, {1, 300, 200, 300}));
  list.push_back(make_schedule({table({1, 2, 3, 4, 5}), table({1, 2, 3, 7, 8}),
                                table({1, 2, 24, 25, 26}), table({1, 64, 65, 66, 67})}));
  list.push_back(make_schedule({table({1, 2, 3, 4, 5}), table({1, 23, 24, 25, 26}),
                                table({4, 5, 6, 7, 8}), table({1, 2, 65, 66, 67})}));
  std::mt19937_64 rng(0x0e5d5eedULL);
  for (int r = 0; r < random_count; ++r) {
    Schedule s;
    for (std::size_t j = 0; j < 4; ++j) {
      long f = 0;
      for (int i = 0; i < n; ++i) {
        f += 1 + static_cast<long>(rng() % 64);
        s.F[j].push_back(Rational(f));
      }
    }
    list.push_back(std::move(s));
  }
  return list;
}

GapSolution alpha_beta(const BasicGapSystem<Rational>& sys) {
  const auto g = gap_determinants(sys);
  GapSolution sol;
  if (g.D[3].is_zero()) {
    sol.singular = true;
    return sol;
  }
  sol.alphas = {g.D[0] / g.D[3], -g.D[1] / g.D[3], g.D[2] / g.D[3]};
  sol.beta = g.beta_d4 / g.D[3];
  return sol;
}

std::optional<Velocity> fm_feasible(const std::vector<std::vector<Rational>>& A,
                                    const std::vector<Rational>& b) {
  if (A.size() != b.size()) throw SizeMismatch("fm_feasible: row count mismatch");
  const std::size_t d = A.empty() ? 0 : A.front().size();
  std::vector<std::vector<Inequality>> levels(d + 1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != d) throw SizeMismatch("fm_feasible: ragged matrix");
    levels[0].push_back(Inequality{A[i], b[i]});
  }
  // Rows without variables must hold on their own.
  for (const auto& r : levels[0]) {
    const bool constant = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x.is_zero(); });
    if (constant && r.b.sign() <= 0) return std::nullopt;
  }
  // levels[k] involves variables 0..d-1-k.
  for (std::size_t k = 0; k < d; ++k) {
    if (!eliminate(levels[k], d - 1 - k, levels[k + 1])) return std::nullopt;
  }
  Velocity x = Velocity::zero(static_cast<int>(d));
  for (std::size_t v = 0; v < d; ++v) {
    std::optional<Rational> lo, hi;
    for (const auto& r : levels[d - 1 - v]) {
      const int s = r.a[v].sign();
      if (s == 0) continue;
      Rational rest = r.b;
      for (std::size_t l = 0; l < v; ++l) rest += r.a[l] * x.components[l];
      const Rational bound = -rest / r.a[v];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (!(*lo < *hi)) return std::nullopt;  // cannot happen after a clean projection
      x.components[v] = (*lo + *hi) / Rational(2);
    } else if (lo) {
      x.components[v] = *lo + Rational(1);
    } else if (hi) {
      x.components[v] = *hi - Rational(1);
    }
  }
  return x;
}

std::optional<Velocity> fm_feasible(const BasicGapSystem<Rational>& sys) {
  std::vector<std::vector<Rational>> A;
  for (const auto& row : sys.A) A.emplace_back(row.begin(), row.end());
  return fm_feasible(A, sys.b);
}

GapBuild build_gap_system(const PermSet& q, const Schedule& s, int solved, std::size_t translation) {
  if (q.size() != 5) throw Unsupported("gap systems need exactly 5 observers");
  if (solved < 1 || solved > 4) throw Error("solved observer index must be in 1..4");
  if (translation >= 5) throw Error("translation index must be in 0..4");
  validate_schedule(s);
  if (s.n() != q.n()) throw SizeMismatch("schedule length differs from permutation size");

  const auto t = sorted_translation(q.members(), translation);
  GapBuild out;
  out.axes = axes_without(t, solved);
  out.solved = t[static_cast<std::size_t>(solved)];
  std::vector<Rational> times;
  std::vector<std::array<Rational, 3>> coords;
  static_cast<BasicGapSystem<Rational>&>(out.system) =
      assemble_gap_system(out.solved, out.axes, s, &times, &coords);
  out.system.provenance = GapProvenance{q, 0, translation, solved};
  out.events = to_events(times, coords);

  // Construction identity: each axis observer sees F_j along its sequence.
  for (std::size_t j = 0; j < 3; ++j) {
    if (observed_order(out.events, unit(j)) != out.axes[j]) {
      throw Error("gap construction: axis observer " + std::to_string(j + 1) + " disagrees");
    }
  }
  return out;
}

GapVerdict classify_gap_system(const Permutation& solved, const std::array<Permutation, 3>& axes,
                               const IntSchedule& s) {
  const auto narrow = assemble_gap_system(solved, axes, s);
  if (narrow.A.size() != 4) throw Unsupported("alpha/beta test needs n = 5");
  BasicGapSystem<Wide> sys;
  for (std::size_t i = 0; i < 4; ++i) {
    sys.A.push_back({narrow.A[i][0], narrow.A[i][1], narrow.A[i][2]});
    sys.b.push_back(narrow.b[i]);
  }
  const auto g = gap_determinants(sys);
  const int s4 = sign_of(g.D[3]);
  if (s4 == 0) return GapVerdict::Singular;
  const bool positive = sign_of(g.D[0]) * s4 > 0 || sign_of(g.D[1]) * s4 < 0 ||
                        sign_of(g.D[2]) * s4 > 0 || sign_of(g.beta_d4) * s4 > 0;
  return positive ? GapVerdict::Feasible : GapVerdict::NonPositive;
}

StageResult alpha_beta_stage(std::span<const Permutation> members, const IntSchedule& s) {
  if (members.size() != 5) throw Unsupported("alpha/beta stage needs exactly 5 observers");
  StageResult r;
  for (std::size_t tr = 0; tr < 5; ++tr) {
    const auto t = sorted_translation(members, tr);
    for (int solved = 1; solved <= 4; ++solved) {
      switch (classify_gap_system(t[static_cast<std::size_t>(solved)], axes_without(t, solved), s)) {
        case GapVerdict::Feasible:
          r.resolved = true;
          r.translation = tr;
          r.solved = solved;
          return r;
        case GapVerdict::Singular:
          ++r.singular;
          break;
        case GapVerdict::NonPositive:
          ++r.nonpositive;
          break;
      }
    }
  }
  return r;
}

Realization witness_from_system(const PermSet& q, const Schedule& s, std::size_t schedule_index,
                                std::size_t translation, int solved) {
  const auto build = build_gap_system(q, s, solved, translation);
  const auto u = fm_feasible(build.system);
  if (!u) throw Error("witness_from_system: gap system is infeasible");

  std::vector<Permutation> claim{Permutation::identity(q.n())};
  std::vector<Velocity> velocities{Velocity::zero(3)};
  for (std::size_t j = 0; j < 3; ++j) {
    claim.push_back(build.axes[j]);
    velocities.push_back(unit(j));
  }
  claim.push_back(build.solved);
  velocities.push_back(*u);

  // Order velocities to match the sorted claim.
  std::vector<std::size_t> order(claim.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return claim[a] < claim[b]; });
  Witness w;
  w.events = build.events;
  for (auto i : order) w.velocities.push_back(velocities[i]);
  w.claim = PermSet(claim);

  const auto lambda = inverse(q.members()[translation]);
  Realization r;
  r.witness = normalize_witness(relabel_witness(w, lambda));
  r.schedule = schedule_index;
  r.translation = translation;
  r.solved = solved;
  const auto check = verify_witness(r.witness);
  if (!check) throw Error("realizer produced a witness that fails verification: " + check.diagnostic);
  return r;
}

std::optional<Realization> realize_detailed(const PermSet& q, std::span<const Schedule> schedules) {
  if (q.size() == 0) throw Error("realize: empty set");
  if (q.size() > 5) throw Unsupported("realize handles at most 5 observers");

  if (q.size() <= 4) {
    const std::vector<Rational> speeds(3, Rational(1, 2));
    const auto t = translations(q).front();
    Realization r;
    r.witness = relabel_witness(build_axis_witness(t, speeds), inverse(q.members().front()));
    r.route = "axis";
    const auto check = verify_witness(r.witness);
    if (!check) throw Error("axis construction failed verification: " + check.diagnostic);
    return r;
  }

  for (std::size_t si = 0; si < schedules.size(); ++si) {
    const auto& s = schedules[si];
    validate_schedule(s);
    if (s.n() != q.n()) throw SizeMismatch("schedule length differs from permutation size");
    const auto fast = q.n() == 5 ? integral_schedule(s) : std::nullopt;
    for (std::size_t tr = 0; tr < 5; ++tr) {
      for (int solved = 1; solved <= 4; ++solved) {
        bool direct = q.n() != 5;
        if (q.n() == 5) {
          GapVerdict v;
          if (fast) {
            const auto t = sorted_translation(q.members(), tr);
            v = classify_gap_system(t[static_cast<std::size_t>(solved)], axes_without(t, solved), *fast);
          } else {
            const auto sol = alpha_beta(build_gap_system(q, s, solved, tr).system);
            v = sol.singular ? GapVerdict::Singular
                : (sol.alphas[0].sign() > 0 || sol.alphas[1].sign() > 0 ||
                   sol.alphas[2].sign() > 0 || sol.beta.sign() > 0)
                    ? GapVerdict::Feasible
                    : GapVerdict::NonPositive;
          }
          if (v == GapVerdict::Feasible) {
            auto r = witness_from_system(q, s, si, tr, solved);
            r.route = "alpha-beta";
            return r;
          }
          direct = v == GapVerdict::Singular;
        }
        if (direct && fm_feasible(build_gap_system(q, s, solved, tr).system)) {
          auto r = witness_from_system(q, s, si, tr, solved);
          r.route = "direct";
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> realize(const PermSet& q, std::span<const Schedule> schedules) {
  auto r = realize_detailed(q, schedules);
  if (!r) return std::nullopt;
  return std::move(r->witness);
}

}  // namespace evord
