#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schurp {

// All exact scalar arithmetic runs on GMP rationals; mpq_class keeps values
// canonical (reduced, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& value);

// Exact integer or rational power of two, exponent of either sign.
Rational pow2_rational(long exponent);

}  // namespace schurp
