#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liecoh {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" with optional sign. Throws ParseError on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals, e.g. "1,0,-1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace liecoh
