#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rhocalc {

/// Arbitrary-precision rational in lowest terms with positive denominator.
/// gmpxx keeps results of arithmetic canonical; values built from a raw
/// numerator/denominator pair must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "p", "p/q", or "-p/q" (decimal). Throws ValidationError.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" for integers.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Distinct prime divisors of |n| in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

/// k-th prime, 0-based: nth_prime(0) == 2, nth_prime(1) == 3.
std::uint64_t nth_prime(std::size_t k);

}  // namespace rhocalc
