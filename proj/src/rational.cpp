#include "qlhp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qlhp {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string numerator_string(const Rational& value) { return value.get_num().get_str(); }

std::string denominator_string(const Rational& value) { return value.get_den().get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational frac(const Rational& value) {
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  Rational r = value - Rational(floor_value);
  r.canonicalize();
  return r;
}

long to_long(const Rational& value) {
  if (!is_integer(value)) throw std::domain_error("expected an integer, got " + to_string(value));
  if (!value.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(value));
  return value.get_num().get_si();
}

}  // namespace qlhp
