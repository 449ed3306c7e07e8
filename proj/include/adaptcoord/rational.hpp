#pragma once

#include <gmpxx.h>

#include <string>

namespace adaptcoord {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; constructors from a numerator/denominator pair
// go through make_rational, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(const std::string& text);

// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
int sign(const Rational& r);

// Converts an integral rational that fits into a long; throws otherwise.
long to_long(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

} // namespace adaptcoord
