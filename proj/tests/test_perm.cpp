#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "evord/certificate.hpp"
#include "evord/error.hpp"
#include "evord/perm.hpp"
#include "evord/text_io.hpp"
#include "sign_obstruction_reps.hpp"

using namespace evord;

namespace {

// Oracle: pairs (i,j), i<j, with p(j) < p(i), straight from the definition.
std::set<std::pair<int, int>> brute_inversions(const std::vector<int>& image) {
  std::set<std::pair<int, int>> out;
  const int n = static_cast<int>(image.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (image[static_cast<std::size_t>(j - 1)] < image[static_cast<std::size_t>(i - 1)]) out.insert({i, j});
    }
  }
  return out;
}

std::set<std::pair<int, int>> as_set(const std::vector<PairIndex>& v) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : v) out.insert({p.j, p.k});
  return out;
}

PermSet random_set(std::mt19937_64& rng, int n, std::size_t k) {
  auto all = all_permutations(n);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return PermSet(all);
}

}  // namespace

TEST_CASE("compose evaluates p(q(i))") {
  CHECK(compose({2, 1, 3}, Permutation::identity(3)) == Permutation{2, 1, 3});
  CHECK(compose({2, 3, 1}, {2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(compose({3, 2, 1}, {3, 2, 1}).is_identity());
  CHECK_THROWS_AS(compose({2, 1}, {1, 2, 3}), SizeMismatch);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)).is_identity());
  CHECK(inverse({2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(inverse({3, 2, 1}) == Permutation{3, 2, 1});
  for (const auto& p : all_permutations(4)) CHECK(compose(p, inverse(p)).is_identity());
}

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), Error);
  CHECK_THROWS_AS(PermSet({Permutation{1, 2}, Permutation{1, 2}}), Error);
  CHECK_THROWS_AS(PermSet({Permutation{1, 2}, Permutation{1, 2, 3}}), SizeMismatch);
}

TEST_CASE("inversion_set examples") {
  CHECK(inversion_set(Permutation::identity(5)).empty());
  CHECK(as_set(inversion_set({3, 2, 1})) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(as_set(inversion_set({2, 3, 1})) == std::set<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("inversion_set agrees with the definition and complements under reversal (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = Permutation::reversal(n);
    const auto pairs = as_set(all_pairs(n));
    for (const auto& p : all_permutations(n)) {
      const auto inv = as_set(inversion_set(p));
      CHECK(inv == brute_inversions(p.image()));
      CHECK(inversion_count(p) == static_cast<int>(inv.size()));
      CHECK(inv.empty() == p.is_identity());
      CHECK((inv.size() == pairs.size()) == (p == r));
      std::set<std::pair<int, int>> complement;
      std::set_difference(pairs.begin(), pairs.end(), inv.begin(), inv.end(),
                          std::inserter(complement, complement.begin()));
      CHECK(as_set(inversion_set(compose(r, p))) == complement);
    }
  }
}

TEST_CASE("time reversal") {
  const auto q0 = cyclic_q0();
  CHECK(time_reverse_set(q0) == q0);
  const PermSet id{Permutation::identity(4)};
  CHECK(time_reverse_set(id) == id);
  // Listed obstruction pairs (entries 9 and 10) are time reverses of each other.
  CHECK(time_reverse_set(parse_permset(kSignObstructionReps[8])) == parse_permset(kSignObstructionReps[9]));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_set(rng, 5, 1 + rng() % 6);
    CHECK(time_reverse_set(time_reverse_set(q)) == q);
  }
}

TEST_CASE("translations and canonicalize") {
  const PermSet id{Permutation::identity(3)};
  CHECK(translations(id) == std::vector<PermSet>{id});

  const auto q0 = cyclic_q0();
  const auto tq0 = translations(q0);
  CHECK(tq0.size() == 5);
  for (const auto& t : tq0) CHECK(t == q0);

  const PermSet pair{Permutation{1, 2}, Permutation{2, 1}};
  CHECK(canonicalize(pair) == pair);

  // Relabel Q0 by (2,3,4,5,1) and recover it.
  std::vector<Permutation> moved;
  for (const auto& p : q0.members()) moved.push_back(compose(Permutation{2, 3, 4, 5, 1}, p));
  CHECK(canonicalize(PermSet(moved)) == q0);

  const PermSet non_group{{1, 2, 3, 4, 5}, {2, 1, 3, 4, 5}, {1, 3, 2, 4, 5}, {5, 4, 3, 2, 1}, {2, 3, 1, 5, 4}};
  const auto ts = translations(non_group);
  CHECK(std::set<PermSet>(ts.begin(), ts.end()).size() == 5);
  for (const auto& t : ts) CHECK(t.contains_identity());

  const auto first = parse_permset(kSignObstructionReps[0]);
  for (const auto& t : translations(first)) CHECK(canonicalize(t) == canonicalize(first));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_set(rng, 5, 1 + rng() % 5);
    const auto c = canonicalize(q);
    CHECK(c.contains_identity());
    CHECK(canonicalize(c) == c);
    for (const auto& tr : translations(q)) CHECK(canonicalize(tr) == c);
  }
}

TEST_CASE("cyclic groups") {
  CHECK(is_cyclic_group(cyclic_q0()));
  CHECK(is_cyclic_group(PermSet{Permutation::identity(4)}));
  CHECK_FALSE(is_cyclic_group(parse_permset(kSignObstructionReps[0])));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto q = random_set(rng, 4, 1 + rng() % 4);
    if (!is_cyclic_group(q)) continue;
    for (const auto& tr : translations(q)) CHECK(tr == q);
  }
}

TEST_CASE("chain_orderable: necessary condition on a line") {
  for (const auto& s : all_permutations(4)) {
    if (s.is_identity()) continue;
    CHECK(chain_orderable(PermSet{Permutation::identity(4), s}));
  }
  CHECK_FALSE(chain_orderable(PermSet{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
  CHECK_FALSE(chain_orderable(PermSet{{1, 2, 3, 4, 5, 6}, {2, 1, 3, 4, 6, 5}, {1, 2, 4, 3, 6, 5}}));
  CHECK(chain_orderable(PermSet{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}}));
}

TEST_CASE("chain_orderable matches brute force over orderings (n = 4, |Q| <= 4)") {
  // Oracle: try every translation and every ordering of members.
  auto reversal_pairs = [](const Permutation& p) { return as_set(inversion_set(inverse(p))); };
  auto brute = [&](const PermSet& q) {
    for (const auto& t : translations(q)) {
      auto m = t.members();
      std::sort(m.begin(), m.end());
      do {
        bool ok = true;
        for (std::size_t i = 1; i < m.size() && ok; ++i) {
          const auto a = reversal_pairs(m[i - 1]);
          const auto b = reversal_pairs(m[i]);
          ok = std::includes(b.begin(), b.end(), a.begin(), a.end());
        }
        if (ok) return true;
      } while (std::next_permutation(m.begin(), m.end()));
    }
    return false;
  };
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const auto q = random_set(rng, 4, 2 + rng() % 3);
    CHECK(chain_orderable(q) == brute(q));
  }
}

TEST_CASE("text round trip") {
  const auto q = parse_permset("{(1,2,3),(2,3,1)}");
  CHECK(q.size() == 2);
  CHECK(q.n() == 3);
  CHECK(parse_permset(q.str()) == q);
  CHECK(parse_permset(kSignObstructionReps[0]).size() == 5);
  CHECK(parse_permset(kSignObstructionReps[0]).n() == 6);
  CHECK_THROWS_AS(parse_permset("{(1,1,2)}"), ParseError);
  CHECK_THROWS_AS(parse_permset("{(1,2),(1,2,3)}"), ParseError);
  CHECK_THROWS_AS(parse_permset("{(1,2),(1,2)}"), ParseError);
  try {
    parse_permset("{(1,2,3),(2,2,1)}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 8);
  }
  const auto lines = parse_permset_lines("# header\n(1,2);(2,1)\n\n(1,2,3)\n");
  CHECK(lines.size() == 2);
}
