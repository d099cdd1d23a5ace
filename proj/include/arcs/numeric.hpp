#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arcs {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k) for non-negative integers; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Generalised binomial x(x-1)...(x-k+1)/k! for a rational top argument.
/// Agrees with binomial() when x is a non-negative integer.
Rational binomial(const Rational& x, std::uint64_t k);

/// Parses "A/B" or "A" into a canonical rational. Decimal points and
/// exponents are rejected: thresholds must be exact.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

BigInt ceil(const Rational& v);
BigInt floor(const Rational& v);

}  // namespace arcs
