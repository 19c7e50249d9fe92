#include "evord/rational.hpp"

#include <cctype>

#include "evord/error.hpp"

namespace evord {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

mpz_class parse_integer(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected integer", offset + i);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("unexpected character in integer", offset + j);
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  const auto num = parse_integer(text.substr(0, slash), 0);
  const auto den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace evord
