#include "whopf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace whopf {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= den;
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("sign in denominator: '" + std::string(text) + "'");
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace whopf
