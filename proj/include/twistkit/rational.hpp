#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace twistkit {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace twistkit
