#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "spv/errors.hpp"

namespace spv {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form after every
/// operation: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(Int num, Int den);

/// C(n, k), computed by the multiplicative row formula with interleaved
/// exact division. Returns 0 when k > n. Throws DomainError on negative
/// arguments.
Int binomial(long long n, long long k);

/// n! with 0! = 1. Throws DomainError on negative n.
Int factorial(long long n);

/// base^exp with the empty-product convention 0^0 = 1.
/// Throws ZeroToNegativePowerError when base == 0 and exp < 0.
Rational rational_pow(const Rational& base, long long exp);

/// Parses "p", "-p", "p/q" or "-p/q" (q > 0 after normalization).
/// Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical fraction string: "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Nearest-double conversion.
double to_double(const Rational& r);

} // namespace spv
