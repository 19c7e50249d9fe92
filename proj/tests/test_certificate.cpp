#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "evord/certificate.hpp"
#include "evord/error.hpp"
#include "evord/polynomial.hpp"
#include "evord/realizer.hpp"

using namespace evord;

namespace {

Polynomial h(int i, int j) { return Polynomial::variable(i, j); }

std::map<GapVariable, Rational> constant_gaps(const Rational& c) {
  std::map<GapVariable, Rational> m;
  for (int j = 0; j < 4; ++j) {
    for (int i = 1; i <= 4; ++i) m[{i, j}] = c;
  }
  return m;
}

// The numeric schedule with F_j(1) = 0 and the given gaps.
Schedule schedule_from(const std::map<GapVariable, Rational>& gaps) {
  std::array<std::vector<Rational>, 4> F;
  for (int j = 0; j < 4; ++j) {
    Rational acc = 0;
    for (int i = 1; i <= 5; ++i) {
      F[static_cast<std::size_t>(j)].push_back(acc);
      if (i < 5) acc += gaps.at({i, j});
    }
  }
  return make_schedule(F);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto a = h(1, 0);
  const auto b = h(2, 3);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a + b + (-(a + b))).is_zero());
  CHECK(Polynomial(0).is_zero());
  CHECK((a * b).term_count() == 1);
  CHECK(((a + b) * (a + b)).term_count() == 3);
  CHECK(((a + b) * (a + b)).str() == "2 h[1][0] h[2][3] + h[1][0]^2 + h[2][3]^2");
  CHECK((a - 2 * b * b).dump() == "+ h[1][0]\n- 2 h[2][3]^2\n");
  CHECK(Polynomial(-3).dump() == "- 3\n");
  CHECK((a + b).uniform_sign() == 1);
  CHECK((-(a + b)).uniform_sign() == -1);
  CHECK((a - b).uniform_sign() == 0);
  CHECK((a + b).all_coefficients_equal(1));
  // j-major variable order.
  CHECK(GapVariable{4, 0} < GapVariable{1, 1});
}

TEST_CASE("polynomial evaluation") {
  const auto p = h(1, 0) * h(2, 1) - 3 * h(1, 0) + 2;
  std::map<GapVariable, Rational> at{{{1, 0}, Rational(2)}, {{2, 1}, Rational(1, 2)}};
  CHECK(eval_poly(p, at) == Rational(-3));
  at.erase({2, 1});
  CHECK_THROWS_AS(eval_poly(p, at), Error);
}

TEST_CASE("det3") {
  const std::array<long, 3> r0{2, 0, 1}, r1{1, 3, 2}, r2{1, 1, 1};
  // 2(3-2) - 0 + 1(1-3) = 0
  CHECK(det3(r0, r1, r2) == 0);
  CHECK(det3(std::array<long, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
  CHECK(det3(std::array<long, 3>{0, 1, 0}, {1, 0, 0}, {0, 0, 1}) == -1);
  const auto x = h(1, 1);
  const std::array<Polynomial, 3> row{x, x + 1, 2};
  CHECK(det3(row, row, std::array<Polynomial, 3>{1, 2, 3}).is_zero());
}

TEST_CASE("closed-form gap matrix entries") {
  const auto sys = build_symbolic_gap_matrix();
  REQUIRE(sys.A.size() == 4);
  const Polynomial s1 = h(1, 1) + h(2, 1) + h(3, 1) + h(4, 1);
  const Polynomial s3 = h(1, 3) + h(2, 3) + h(3, 3) + h(4, 3);
  const Polynomial s0 = h(1, 0) + h(2, 0) + h(3, 0) + h(4, 0);
  CHECK(sys.A[1][0] == -s1 - h(1, 0));
  CHECK(sys.A[1][1] == h(4, 2) - h(1, 0));
  CHECK(sys.A[3][2] == -s3 - h(3, 0));
  CHECK(sys.A[0][0] == h(4, 1) + s0);
  CHECK(sys.A[2][0] == h(1, 1) - h(2, 0));
  CHECK(sys.b[0] == -s0);
  CHECK(sys.b[2] == h(2, 0));
}

TEST_CASE("closed form equals the generic construction") {
  const auto a = build_symbolic_gap_matrix();
  const auto b = generic_symbolic_gap_matrix();
  CHECK(a.A == b.A);
  CHECK(a.b == b.b);
}

TEST_CASE("symbolic matrix at unit gaps equals the numeric build") {
  const auto sys = build_symbolic_gap_matrix();
  const auto ones = constant_gaps(Rational(1));
  const auto g = build_gap_system(cyclic_q0(), linear_schedule(5, {1, 1, 1, 1}), 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(eval_poly(sys.b[i], ones) == g.system.b[i]);
    for (std::size_t j = 0; j < 3; ++j) CHECK(eval_poly(sys.A[i][j], ones) == g.system.A[i][j]);
  }
}

TEST_CASE("certificate for the cyclic set") {
  const auto r = certify_q0();
  const std::array<int, 4> sign{-1, 1, -1, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(r.D[k].term_count() == 125);
    CHECK(r.D[k].all_coefficients_equal(sign[k]));
    CHECK(r.D_summary[k].sign == sign[k]);
    CHECK(r.D_summary[k].unit);
  }
  CHECK(r.beta_d4.term_count() == 125);
  CHECK(r.beta_d4.all_coefficients_equal(-1));
  CHECK(r.matrices_agree);
  CHECK(r.linear_relation);
  CHECK(r.conclusion);

  const auto ones = constant_gaps(Rational(1));
  CHECK(eval_poly(r.D[0], ones) == Rational(-125));
  CHECK(eval_poly(r.D[1], ones) == Rational(125));
  CHECK(eval_poly(r.D[2], ones) == Rational(-125));
  CHECK(eval_poly(r.D[3], ones) == Rational(125));
  CHECK(eval_poly(r.beta_d4, ones) / eval_poly(r.D[3], ones) == Rational(-1));

  CHECK(r.str().find("certified") != std::string::npos);
  const auto dump = r.dump();
  CHECK(dump.find("# D1\n") == 0);
  CHECK(dump.find("# beta*D4\n") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 5 + 5 * 125);
}

TEST_CASE("symbolic minors agree with numeric minors at random positive gaps") {
  const auto r = certify_q0();
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    std::map<GapVariable, Rational> gaps;
    for (int j = 0; j < 4; ++j) {
      for (int i = 1; i <= 4; ++i) {
        gaps[{i, j}] = Rational(1 + static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 30));
      }
    }
    const auto g = build_gap_system(cyclic_q0(), schedule_from(gaps), 4);
    const auto num = gap_determinants(static_cast<const BasicGapSystem<Rational>&>(g.system));
    for (std::size_t k = 0; k < 4; ++k) CHECK(eval_poly(r.D[k], gaps) == num.D[k]);
    CHECK(eval_poly(r.beta_d4, gaps) == num.beta_d4);
    const auto ab = alpha_beta(g.system);
    CHECK(ab.alphas[0] == num.D[0] / num.D[3]);
    CHECK(ab.alphas[1] == -num.D[1] / num.D[3]);
    CHECK(ab.alphas[2] == num.D[2] / num.D[3]);
    CHECK(ab.beta == num.beta_d4 / num.D[3]);
    for (const auto& a : ab.alphas) CHECK(a.sign() < 0);
    CHECK(ab.beta.sign() < 0);
  }
}

TEST_CASE("cyclic minors") {
  const auto q0 = cyclic_q0();
  CHECK(contains_q0_minor(q0));
  // Translates of the cyclic set are the set itself; a relabeling is a translate.
  std::vector<Permutation> moved;
  for (const auto& p : q0.members()) moved.push_back(compose(Permutation{3, 1, 5, 2, 4}, p));
  CHECK(contains_q0_minor(PermSet(moved)));
  // Extend by appending event 6 at the end of every member.
  std::vector<Permutation> ext;
  for (const auto& p : q0.members()) {
    auto img = p.image();
    img.push_back(6);
    ext.emplace_back(img);
  }
  CHECK(contains_q0_minor(PermSet(ext)));
  CHECK_FALSE(contains_q0_minor(PermSet{{1, 2, 3, 4, 5}, {2, 1, 3, 4, 5}, {1, 3, 2, 4, 5}, {5, 4, 3, 2, 1},
                                        {2, 3, 1, 5, 4}}));
  CHECK_FALSE(contains_q0_minor(PermSet{Permutation::identity(5)}));
}
