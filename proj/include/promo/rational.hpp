#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace promo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected so
/// that exact-mode inputs never pass through floating point.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Comma separated list of rationals, e.g. "1/4,1/4,1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Sum of a list of rationals.
Rational sum(const std::vector<Rational>& values);

}  // namespace promo
