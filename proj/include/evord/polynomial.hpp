#pragma once

// Sparse multivariate polynomials with unbounded integer coefficients over
// the gap variables h[i][j] (gap i of schedule j).

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "evord/rational.hpp"

namespace evord {

/// h_i^{(j)}: i is the gap index (1-based), j the schedule index.
struct GapVariable {
  int i = 1;
  int j = 0;

  /// Canonical order: schedule index major, gap index minor.
  friend std::strong_ordering operator<=>(const GapVariable& a, const GapVariable& b) {
    if (a.j != b.j) return a.j <=> b.j;
    return a.i <=> b.i;
  }
  friend bool operator==(const GapVariable&, const GapVariable&) = default;

  std::string str() const { return "h[" + std::to_string(i) + "][" + std::to_string(j) + "]"; }
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(GapVariable v) : factors_{{v, 1}} {}

  /// (variable, exponent) with exponent > 0, sorted by variable.
  const std::vector<std::pair<GapVariable, int>>& factors() const { return factors_; }
  int degree() const;
  std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

 private:
  std::vector<std::pair<GapVariable, int>> factors_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(GapVariable v);
  static Polynomial variable(int i, int j) { return variable(GapVariable{i, j}); }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// +1 if every coefficient is positive, -1 if every one is negative,
  /// 0 when mixed or zero.
  int uniform_sign() const;
  /// Every coefficient equals `c`.
  bool all_coefficients_equal(long c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Compact infix form, e.g. "h[4][1] + h[1][0] - 2 h[2][0]^2".
  std::string str() const;
  /// One term per line: sign, optional magnitude, then the variables.
  std::string dump() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

/// Throws Error when a variable of `p` is missing from `assignment`.
Rational eval_poly(const Polynomial& p, const std::map<GapVariable, Rational>& assignment);

}  // namespace evord
