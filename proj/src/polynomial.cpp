#include "evord/polynomial.hpp"

#include "evord/error.hpp"

namespace evord {

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::string Monomial::str() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += ' ';
    out += v.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Polynomial Polynomial::variable(GapVariable v) {
  Polynomial p;
  p.terms_.emplace(Monomial(v), mpz_class(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::uniform_sign() const {
  if (terms_.empty()) return 0;
  const int s = sgn(terms_.begin()->second);
  for (const auto& [m, c] : terms_) {
    if (sgn(c) != s) return 0;
  }
  return s;
}

bool Polynomial::all_coefficients_equal(long c) const {
  for (const auto& [m, coef] : terms_) {
    if (coef != c) return false;
  }
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1 && m.degree() > 0;
    if (!unit) out += mag.get_str();
    if (m.degree() > 0) {
      if (!unit) out += ' ';
      out += m.str();
    }
  }
  return out;
}

std::string Polynomial::dump() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    out += c < 0 ? '-' : '+';
    const mpz_class mag = abs(c);
    if (mag != 1 || m.degree() == 0) out += " " + mag.get_str();
    if (m.degree() > 0) out += " " + m.str();
    out += '\n';
  }
  return out;
}

Rational eval_poly(const Polynomial& p, const std::map<GapVariable, Rational>& assignment) {
  mpq_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class term = c;
    for (const auto& [v, e] : m.factors()) {
      const auto it = assignment.find(v);
      if (it == assignment.end()) throw Error("eval_poly: no value for " + v.str());
      for (int k = 0; k < e; ++k) term *= it->second.value();
    }
    total += term;
  }
  return Rational(total);
}

}  // namespace evord
