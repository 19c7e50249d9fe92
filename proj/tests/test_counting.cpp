#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "evord/counting.hpp"
#include "evord/error.hpp"
#include "evord/perm.hpp"

using namespace evord;

namespace {

int element_order(const Permutation& p) {
  auto q = p;
  int k = 1;
  while (!q.is_identity()) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

// Oracle: identity-containing k-subsets Q with r Q r = Q, by enumeration.
long brute_invariant_sets(int n, int k) {
  const auto all = all_permutations(n);
  const auto r = Permutation::reversal(n);
  std::vector<int> partner(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto img = compose(r, compose(all[i], r));
    partner[i] = static_cast<int>(std::lower_bound(all.begin(), all.end(), img) - all.begin());
  }
  // all[0] is the identity; choose k-1 of the rest.
  const int m = static_cast<int>(all.size()) - 1;
  long count = 0;
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + (k - 1), true);
  do {
    std::vector<bool> in(all.size(), false);
    in[0] = true;
    for (int i = 0; i < m; ++i) in[static_cast<std::size_t>(i + 1)] = pick[static_cast<std::size_t>(i)];
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i) ok = !in[i] || in[static_cast<std::size_t>(partner[i])];
    count += ok;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(119, 4) == 7940751);
  CHECK(binomial(719, 4) == mpz_class("11042674501"));
}

TEST_CASE("centralizer order matches enumeration") {
  CHECK(centralizer_order(5) == 8);
  CHECK(centralizer_order(6) == 48);
  for (int n = 1; n <= 6; ++n) {
    const auto r = Permutation::reversal(n);
    long c = 0;
    for (const auto& p : all_permutations(n)) c += compose(p, r) == compose(r, p);
    CHECK(centralizer_order(n) == c);
  }
}

TEST_CASE("invariant set counts") {
  CHECK(invariant_set_count({6, 5}) == 597861);
  CHECK(invariant_set_count({7, 1}) == 1);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= std::min(5, static_cast<int>(factorial(n).get_si())); ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(invariant_set_count({n, k}) == brute_invariant_sets(n, k));
    }
  }
}

TEST_CASE("invariant 5-sets of S5 by enumeration") {
  // 4-combinations of the non-identity permutations closed under p -> r p r.
  const auto all = all_permutations(5);
  const auto r = Permutation::reversal(5);
  const int N = static_cast<int>(all.size());
  std::vector<int> partner(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    partner[i] = static_cast<int>(std::lower_bound(all.begin(), all.end(), compose(r, compose(all[i], r))) - all.begin());
  }
  long count = 0;
  for (int a = 1; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      for (int c = b + 1; c < N; ++c) {
        for (int d = c + 1; d < N; ++d) {
          const std::array<int, 4> s{a, b, c, d};
          bool closed = true;
          for (int x : s) closed = closed && std::find(s.begin(), s.end(), partner[static_cast<std::size_t>(x)]) != s.end();
          count += closed;
        }
      }
    }
  }
  CHECK(count == 2751);
  CHECK(invariant_set_count({5, 5}) == count);
}

TEST_CASE("order-5 elements and subgroups") {
  for (int n : {5, 6}) {
    long five = 0;
    for (const auto& p : all_permutations(n)) five += element_order(p) == 5;
    const auto c = order5_subgroup_count(n);
    CHECK(c.five_cycles == five);
    CHECK(c.subgroups * 4 == c.five_cycles);
  }
  CHECK(order5_subgroup_count(6).five_cycles == 144);
  CHECK_THROWS_AS(order5_subgroup_count(7), Unsupported);
}

TEST_CASE("translation class counts") {
  CHECK(equivalence_class_count(5) == 1588155);
  CHECK(equivalence_class_count(6) == mpz_class("2208534929"));
  CHECK_THROWS_AS(equivalence_class_count(5, 4), Unsupported);
}

TEST_CASE("translation classes of S5 by orbit enumeration") {
  // Oracle: count identity-containing 5-sets that are lexicographically least
  // among their translates, using a precomputed composition table.
  const auto all = all_permutations(5);
  const int N = static_cast<int>(all.size());
  std::vector<std::uint8_t> table(static_cast<std::size_t>(N * N));
  std::vector<std::uint8_t> inv(static_cast<std::size_t>(N));
  auto index = [&](const Permutation& p) {
    return static_cast<std::uint8_t>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
  };
  for (int a = 0; a < N; ++a) {
    inv[static_cast<std::size_t>(a)] = index(inverse(all[static_cast<std::size_t>(a)]));
    for (int b = 0; b < N; ++b) {
      table[static_cast<std::size_t>(a * N + b)] = index(compose(all[static_cast<std::size_t>(a)], all[static_cast<std::size_t>(b)]));
    }
  }
  long reps = 0;
  std::array<std::uint8_t, 5> s{0, 0, 0, 0, 0};
  for (int a = 1; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      for (int c = b + 1; c < N; ++c) {
        for (int d = c + 1; d < N; ++d) {
          s = {0, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
               static_cast<std::uint8_t>(d)};
          bool least = true;
          for (int t = 1; t < 5 && least; ++t) {
            const auto li = inv[s[static_cast<std::size_t>(t)]];
            std::array<std::uint8_t, 5> u;
            for (std::size_t m = 0; m < 5; ++m) u[m] = table[static_cast<std::size_t>(li * N + s[m])];
            std::sort(u.begin(), u.end());
            least = !(u < s);
          }
          reps += least;
        }
      }
    }
  }
  CHECK(equivalence_class_count(5) == reps);
}

TEST_CASE("diophantine scan") {
  const auto sols = diophantine_solutions(100, 14);
  for (const auto& want : {std::pair<long, long>{3, 3}, {6, 5}, {91, 13}}) {
    CHECK(std::find(sols.begin(), sols.end(), want) != sols.end());
  }
  // Oracle: direct scan.
  std::vector<std::pair<long, long>> brute;
  for (long n = 2; n <= 100; ++n) {
    for (long m = 1; m <= 14; ++m) {
      if (n * (n - 1) / 2 == (1L << (m - 1)) - 1) brute.emplace_back(n, m);
    }
  }
  CHECK(sols == brute);
}
