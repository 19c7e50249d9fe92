#include "evord/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "evord/error.hpp"
#include "evord/realizer.hpp"
#include "evord/report_io.hpp"
#include "evord/signs.hpp"
#include "evord/certificate.hpp"

namespace evord {

namespace {

using ChunkWork = std::function<SearchReport(Shard)>;

// Splits `range` into chunks, runs missing ones on `jobs` threads, stores
// each finished chunk under resume_dir, and merges in chunk order.
SearchReport run_chunks(const std::string& kind, Shard range, const SearchOptions& opt,
                        std::uint64_t chunk, const ChunkWork& work) {
  std::vector<Shard> chunks;
  for (std::uint64_t b = range.begin; b < range.end; b += chunk) {
    chunks.push_back(Shard{b, std::min(range.end, b + chunk)});
  }
  std::vector<std::optional<SearchReport>> results(chunks.size());
  auto part_path = [&](const Shard& s) {
    return *opt.resume_dir / (kind + "-" + std::to_string(s.begin) + "-" + std::to_string(s.end) + ".part");
  };
  std::size_t loaded = 0;
  if (opt.resume_dir) {
    std::filesystem::create_directories(*opt.resume_dir);
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      const auto p = part_path(chunks[i]);
      if (std::filesystem::exists(p)) {
        results[i] = read_report_file(p);
        ++loaded;
      }
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      if (results[i]) continue;
      try {
        auto r = work(chunks[i]);
        r.kind = kind;
        if (opt.resume_dir) write_report_file(part_path(chunks[i]), r);
        results[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks.size());
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(resolve_jobs(opt.jobs),
                                                         static_cast<unsigned>(std::max<std::size_t>(1, chunks.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SearchReport out;
  out.kind = kind;
  std::set<PermSet> flagged;
  for (auto& r : results) {
    out.total_enumerated += r->total_enumerated;
    for (auto& q : r->flagged) flagged.insert(std::move(q));
    for (const auto& [k, v] : r->stats) out.stats[k] += v;
  }
  out.flagged.assign(flagged.begin(), flagged.end());
  out.stats["flagged"] = static_cast<std::int64_t>(out.flagged.size());
  if (loaded > 0) {
    out.resumed_from = std::to_string(loaded) + " of " + std::to_string(chunks.size()) + " chunks";
  }
  return out;
}

Shard effective_range(const SearchOptions& opt, std::uint64_t total) {
  if (!opt.shard) return Shard{0, total};
  const auto s = *opt.shard;
  if (s.begin > s.end || s.end > total) {
    throw Error("shard " + std::to_string(s.begin) + ".." + std::to_string(s.end) +
                " is outside 0.." + std::to_string(total));
  }
  return s;
}

void next_combination(std::array<int, 4>& c, int n) {
  int i = 3;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - 4 + i) --i;
  if (i < 0) return;
  ++c[static_cast<std::size_t>(i)];
  for (int k = i + 1; k < 4; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] + 1;
}

std::vector<Permutation> non_identity(int n) {
  auto all = all_permutations(n);
  all.erase(all.begin());
  return all;
}

bool is_class_representative(const std::array<Permutation, 5>& m) {
  for (std::size_t s = 1; s < 5; ++s) {
    const auto lambda = inverse(m[s]);
    std::array<Permutation, 5> t;
    for (std::size_t k = 0; k < 5; ++k) t[k] = compose(lambda, m[k]);
    std::sort(t.begin(), t.end());
    if (t < m) return false;
  }
  return true;
}

}  // namespace

Shard parse_shard(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("shard must look like a..b", 0);
  try {
    const std::string a(text.substr(0, dots));
    const std::string b(text.substr(dots + 2));
    std::size_t used = 0;
    const Shard s{std::stoull(a, &used), std::stoull(b)};
    if (used != a.size()) throw ParseError("bad shard start", 0);
    if (s.begin > s.end) throw ParseError("shard start exceeds end", 0);
    return s;
  } catch (const std::logic_error&) {
    throw ParseError("shard bounds must be non-negative integers", dots);
  }
}

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("EVORD_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t combination_count(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

std::array<int, 4> unrank_combination(std::uint64_t rank, int n) {
  if (rank >= combination_count(static_cast<std::uint64_t>(n), 4)) throw Error("combination rank out of range");
  std::array<int, 4> c{};
  int x = 0;
  for (int pos = 0; pos < 4; ++pos) {
    for (;;) {
      const auto block = combination_count(static_cast<std::uint64_t>(n - 1 - x), static_cast<std::uint64_t>(3 - pos));
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    c[static_cast<std::size_t>(pos)] = x++;
  }
  return c;
}

std::uint64_t rank_combination(const std::array<int, 4>& c, int n) {
  std::uint64_t rank = 0;
  int x = 0;
  for (int pos = 0; pos < 4; ++pos) {
    for (; x < c[static_cast<std::size_t>(pos)]; ++x) {
      rank += combination_count(static_cast<std::uint64_t>(n - 1 - x), static_cast<std::uint64_t>(3 - pos));
    }
    ++x;
  }
  return rank;
}

SearchReport search_s5(const SearchOptions& opt) {
  const auto perms = non_identity(5);
  const int N = static_cast<int>(perms.size());
  const auto range = effective_range(opt, combination_count(static_cast<std::uint64_t>(N), 4));
  const auto schedules = builtin_schedules(5);
  std::vector<IntSchedule> stages;
  for (std::size_t s = 0; s < 3; ++s) stages.push_back(*integral_schedule(schedules[s]));
  const auto id = Permutation::identity(5);

  auto work = [&](Shard chunk) {
    SearchReport r;
    auto& st = r.stats;
    auto c = unrank_combination(chunk.begin, N);
    for (std::uint64_t rank = chunk.begin; rank < chunk.end; ++rank, next_combination(c, N)) {
      const std::array<Permutation, 5> m{id, perms[static_cast<std::size_t>(c[0])], perms[static_cast<std::size_t>(c[1])],
                                         perms[static_cast<std::size_t>(c[2])], perms[static_cast<std::size_t>(c[3])]};
      if (opt.class_mode && !is_class_representative(m)) continue;
      ++r.total_enumerated;
      bool resolved = false;
      for (std::size_t stage = 0; stage < 3 && !resolved; ++stage) {
        const auto res = alpha_beta_stage(m, stages[stage]);
        const std::string tag = "stage" + std::to_string(stage + 1);
        if (res.resolved) {
          resolved = true;
          ++st[tag + "_realized"];
          if (opt.verify_witnesses) {
            witness_from_system(PermSet(std::vector<Permutation>(m.begin(), m.end())), schedules[stage], stage,
                                res.translation, res.solved);
            ++st["witnesses_verified"];
          }
          break;
        }
        ++st[tag + "_unresolved"];
        if (stage == 0) {
          if (res.singular == 20) {
            ++st["stage1_singular"];
          } else if (res.nonpositive == 20) {
            ++st["stage1_all_negative"];
          } else {
            ++st["stage1_mixed"];
          }
        }
      }
      if (resolved) continue;
      const PermSet q(std::vector<Permutation>(m.begin(), m.end()));
      if (const auto w = realize_detailed(q, schedules)) {
        ++st["fallback_realized"];
        if (opt.verify_witnesses) ++st["witnesses_verified"];  // realize verifies before returning
      } else {
        r.flagged.push_back(q);
      }
    }
    return r;
  };
  return run_chunks(opt.class_mode ? "s5-classes" : "s5", range, opt, opt.chunk, work);
}

SearchReport search_s6_signs(const SearchOptions& opt) {
  const auto perms = non_identity(6);
  const int N = static_cast<int>(perms.size());
  const auto range = effective_range(opt, combination_count(static_cast<std::uint64_t>(N), 4));
  constexpr int kPairs = 15;
  constexpr std::uint32_t kAll = (1U << kPairs) - 1;
  std::vector<std::uint32_t> bits;
  for (const auto& p : perms) bits.push_back(pair_reversal_bits(p));
  const auto id = Permutation::identity(6);

  auto flag = [&](SearchReport& r, const std::array<int, 4>& c) {
    r.flagged.push_back(PermSet{id, perms[static_cast<std::size_t>(c[0])], perms[static_cast<std::size_t>(c[1])],
                                perms[static_cast<std::size_t>(c[2])], perms[static_cast<std::size_t>(c[3])]});
  };

  if (opt.long_run) {
    auto work = [&](Shard chunk) {
      SearchReport r;
      r.total_enumerated = chunk.size();
      auto c = unrank_combination(chunk.begin, N);
      std::array<std::uint32_t, 8> P{};
      std::array<int, 3> prefix{-1, -1, -1};
      for (std::uint64_t rank = chunk.begin; rank < chunk.end; ++rank, next_combination(c, N)) {
        if (prefix[0] != c[0] || prefix[1] != c[1] || prefix[2] != c[2]) {
          prefix = {c[0], c[1], c[2]};
          const std::uint32_t x = bits[static_cast<std::size_t>(c[0])];
          const std::uint32_t y = bits[static_cast<std::size_t>(c[1])];
          const std::uint32_t z = bits[static_cast<std::size_t>(c[2])];
          for (std::uint32_t p = 0; p < 8; ++p) {
            P[p] = ((p & 1U) ? x : ~x) & ((p & 2U) ? y : ~y) & ((p & 4U) ? z : ~z) & kAll;
          }
        }
        const std::uint32_t w = bits[static_cast<std::size_t>(c[3])];
        bool covered = (P[0] & w) != 0;
        for (std::uint32_t p = 1; p < 8 && covered; ++p) covered = (P[p] & w) && (P[p] & ~w);
        if (covered) flag(r, c);
      }
      return r;
    };
    return run_chunks("s6-signs-long", range, opt, std::max<std::uint64_t>(opt.chunk, 1ULL << 24), work);
  }

  // Exact necessary conditions for all 15 patterns to occur among 15 pairs:
  // the patterns are then hit once each, so every moving observer reverses
  // 8 pairs, every two share the 3/4/4/4 split and every three the 1/2/.../2 split.
  std::vector<int> cand;
  for (int i = 0; i < N; ++i) {
    if (std::popcount(bits[static_cast<std::size_t>(i)]) == 8) cand.push_back(i);
  }
  auto pair_ok = [&](std::uint32_t x, std::uint32_t y) {
    return std::popcount(~x & ~y & kAll) == 3 && std::popcount(x & y) == 4 && std::popcount(x & ~y & kAll) == 4;
  };
  auto triple_ok = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    for (std::uint32_t p = 0; p < 8; ++p) {
      const int want = p == 0 ? 1 : 2;
      if (std::popcount(((p & 1U) ? x : ~x) & ((p & 2U) ? y : ~y) & ((p & 4U) ? z : ~z) & kAll) != want) return false;
    }
    return true;
  };
  // Ranks of combinations starting with a given prefix form an interval.
  auto prefix_range = [&](std::array<int, 4> lo_c, int fixed) {
    std::array<int, 4> hi_c = lo_c;
    for (int k = fixed; k < 4; ++k) {
      lo_c[static_cast<std::size_t>(k)] = lo_c[static_cast<std::size_t>(k - 1)] + 1;
      hi_c[static_cast<std::size_t>(k)] = N - 4 + k;
    }
    return Shard{rank_combination(lo_c, N), rank_combination(hi_c, N) + 1};
  };
  auto overlaps = [](Shard a, Shard b) { return a.begin < b.end && b.begin < a.end; };

  auto work = [&](Shard chunk) {
    SearchReport r;
    r.total_enumerated = chunk.size();
    std::int64_t tested = 0;
    const std::size_t K = cand.size();
    for (std::size_t a = 0; a < K; ++a) {
      const int ia = cand[a];
      if (ia > N - 4 || !overlaps(prefix_range({ia, 0, 0, 0}, 1), chunk)) continue;
      const auto xa = bits[static_cast<std::size_t>(ia)];
      for (std::size_t b = a + 1; b < K; ++b) {
        const int ib = cand[b];
        const auto xb = bits[static_cast<std::size_t>(ib)];
        if (ib > N - 3 || !pair_ok(xa, xb) || !overlaps(prefix_range({ia, ib, 0, 0}, 2), chunk)) continue;
        for (std::size_t cc = b + 1; cc < K; ++cc) {
          const auto xc = bits[static_cast<std::size_t>(cand[cc])];
          if (!pair_ok(xa, xc) || !pair_ok(xb, xc) || !triple_ok(xa, xb, xc)) continue;
          for (std::size_t d = cc + 1; d < K; ++d) {
            const auto xd = bits[static_cast<std::size_t>(cand[d])];
            ++tested;
            const std::array<std::uint32_t, 4> mb{xa, xb, xc, xd};
            if (!covers_all_sign_patterns(mb, kPairs)) continue;
            const std::array<int, 4> c{ia, ib, cand[cc], cand[d]};
            const auto rank = rank_combination(c, N);
            if (rank >= chunk.begin && rank < chunk.end) flag(r, c);
          }
        }
      }
    }
    r.stats["candidates_tested"] = tested;
    return r;
  };
  auto report = run_chunks("s6-signs", range, opt, std::max<std::uint64_t>(opt.chunk, 1ULL << 30), work);
  report.stats["eight_reversal_members"] = static_cast<std::int64_t>(cand.size());
  return report;
}

SearchReport q0_extension_sets() {
  const auto q0 = cyclic_q0();
  // inserted[m][k]: member m with event 6 inserted before position k.
  std::array<std::array<Permutation, 6>, 5> inserted;
  for (std::size_t m = 0; m < 5; ++m) {
    const auto image = q0.members()[m].image();
    for (std::size_t k = 0; k < 6; ++k) {
      auto v = image;
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(k), 6);
      inserted[m][k] = Permutation(v);
    }
  }
  SearchReport r;
  r.kind = "q0-extend";
  std::set<PermSet> distinct;
  std::int64_t raw = 0;
  std::array<std::size_t, 5> pos{};
  for (int code = 0; code < 7776; ++code) {
    int x = code;
    for (auto& p : pos) {
      p = static_cast<std::size_t>(x % 6);
      x /= 6;
    }
    const PermSet s{inserted[0][pos[0]], inserted[1][pos[1]], inserted[2][pos[2]], inserted[3][pos[3]],
                    inserted[4][pos[4]]};
    for (auto& t : translations(s)) {
      ++raw;
      distinct.insert(std::move(t));
    }
  }
  r.flagged.assign(distinct.begin(), distinct.end());
  r.total_enumerated = static_cast<std::uint64_t>(raw);
  r.stats = class_analysis(r.flagged);
  r.stats["raw"] = raw;
  r.stats["distinct"] = static_cast<std::int64_t>(r.flagged.size());
  return r;
}

std::vector<PermSet> expand_classes(std::span<const PermSet> reps) {
  std::set<PermSet> out;
  for (const auto& q : reps) {
    for (const auto& base : {q, time_reverse_set(q)}) {
      for (auto& t : translations(base)) out.insert(std::move(t));
    }
  }
  return {out.begin(), out.end()};
}

std::map<std::string, std::int64_t> class_analysis(std::span<const PermSet> sets) {
  std::map<PermSet, std::vector<const PermSet*>> classes;
  for (const auto& q : sets) classes[canonicalize(q)].push_back(&q);

  std::map<std::string, std::int64_t> st;
  st["sets"] = static_cast<std::int64_t>(sets.size());
  st["classes"] = static_cast<std::int64_t>(classes.size());
  std::int64_t groups = 0;
  for (const auto& q : sets) groups += is_cyclic_group(q) ? 1 : 0;
  st["groups"] = groups;
  st["non_group_sets"] = static_cast<std::int64_t>(sets.size()) - groups;

  std::int64_t group_classes = 0, tr_inv = 0, ng_tr_inv = 0, inv_inv = 0, tr_and_inv = 0;
  for (const auto& [rep, members] : classes) {
    const bool group = is_cyclic_group(rep);
    const bool tr = canonicalize(time_reverse_set(rep)) == rep;
    const bool self_inverse = std::any_of(members.begin(), members.end(),
                                          [](const PermSet* s) { return inverse_set(*s) == *s; });
    group_classes += group;
    tr_inv += tr;
    ng_tr_inv += tr && !group;
    inv_inv += self_inverse;
    tr_and_inv += tr && self_inverse;
  }
  const std::int64_t nclasses = static_cast<std::int64_t>(classes.size());
  st["group_classes"] = group_classes;
  st["non_group_classes"] = nclasses - group_classes;
  st["tr_invariant_classes"] = tr_inv;
  st["tr_pairs"] = (nclasses - tr_inv) / 2;
  st["cases_to_consider"] = tr_inv + (nclasses - tr_inv) / 2;
  st["non_group_tr_invariant_classes"] = ng_tr_inv;
  st["non_group_tr_pairs"] = (nclasses - group_classes - ng_tr_inv) / 2;
  st["inverse_invariant_classes"] = inv_inv;
  st["tr_and_inverse_invariant_classes"] = tr_and_inv;
  return st;
}

}  // namespace evord
