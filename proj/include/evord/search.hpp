#pragma once

// Enumeration engines over identity-containing 5-subsets of S_5 and S_6.
// A subset is {identity} plus a 4-combination of the non-identity
// permutations in lexicographic order; combinations are addressed by their
// lexicographic rank so work splits into resumable rank intervals.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evord/perm.hpp"

namespace evord {

struct SearchReport {
  std::string kind;
  std::uint64_t total_enumerated = 0;
  std::vector<PermSet> flagged;  // identity-containing, sorted, distinct
  std::map<std::string, std::int64_t> stats;
  std::optional<std::string> resumed_from;
};

/// Half-open interval [begin, end) of combination ranks.
struct Shard {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const { return end - begin; }
};

/// "a..b" (inclusive start, exclusive end).
Shard parse_shard(std::string_view text);

struct SearchOptions {
  unsigned jobs = 0;                  // 0: EVORD_JOBS or hardware concurrency
  std::optional<Shard> shard;         // default: the whole rank space
  bool class_mode = false;            // s5: one representative per translation class
  bool verify_witnesses = false;      // s5: build and verify a witness per realized set
  bool long_run = false;              // s6: unpruned per-combination test
  std::optional<std::filesystem::path> resume_dir;
  std::uint64_t chunk = 1 << 16;      // ranks per work unit
};

unsigned resolve_jobs(unsigned requested);

/// C(n, k) in 64 bits.
std::uint64_t combination_count(std::uint64_t n, std::uint64_t k);
/// The rank-th 4-combination of {0..n-1} in lexicographic order.
std::array<int, 4> unrank_combination(std::uint64_t rank, int n);
std::uint64_t rank_combination(const std::array<int, 4>& c, int n);

/// Every identity-containing 5-subset of S_5 through the alpha/beta stages
/// of the three tabulated schedules, then the full realizer. Flagged sets
/// were never realized.
SearchReport search_s5(const SearchOptions& opt = {});

/// Every identity-containing 5-subset of S_6 whose event pairs produce all
/// 15 non-trivial reversal patterns. The default mode enumerates only
/// combinations that pass exact necessary conditions; --long-run tests every
/// combination.
SearchReport search_s6_signs(const SearchOptions& opt = {});

/// Inserts a sixth event into each member of Q0 in every way and collects
/// the identity-containing translates.
SearchReport q0_extension_sets();

/// All identity-containing translates of each set and of its time reverse.
std::vector<PermSet> expand_classes(std::span<const PermSet> reps);

/// classes, groups, tr_invariant_classes, tr_pairs, cases_to_consider,
/// non_group_* variants and inverse_invariant_classes.
std::map<std::string, std::int64_t> class_analysis(std::span<const PermSet> sets);

}  // namespace evord
