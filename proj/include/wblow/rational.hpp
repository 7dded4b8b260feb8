#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wblow {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds num/den in lowest terms. den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Parses "p" or "p/q" (optional leading sign). Throws ArgumentError.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace wblow
