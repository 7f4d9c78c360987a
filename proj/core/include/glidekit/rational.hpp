#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace glidekit {

/// Arbitrary precision integers and rationals. Every coefficient in the
/// library is one of these; there is no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws Error(kParse) on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// n! for n >= 0.
Integer factorial(long n);

}  // namespace glidekit
