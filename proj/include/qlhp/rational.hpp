#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlhp {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Every value produced by the helpers below is canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

std::string numerator_string(const Rational& value);
std::string denominator_string(const Rational& value);

bool is_integer(const Rational& value);

/// Fractional part in [0, 1).
Rational frac(const Rational& value);

/// Exact conversion; throws std::domain_error when the value is not an
/// integer or does not fit in a long.
long to_long(const Rational& value);

}  // namespace qlhp
