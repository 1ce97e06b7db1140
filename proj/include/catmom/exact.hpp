#pragma once

// Exact rational scalars shared by every exact module.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace catmom {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using ExactScalar = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or an integer literal. Throws std::invalid_argument.
ExactScalar parse_rational(std::string_view text);

/// Like parse_rational, but also accepts plain decimals such as "-1.25",
/// converted exactly.
ExactScalar parse_decimal(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactScalar& x);

bool is_integer(const ExactScalar& x);

ExactScalar pow(const ExactScalar& base, unsigned exponent);

/// Binomial coefficient with a rational upper argument, computed as the
/// falling factorial a(a-1)...(a-i+1)/i!.
ExactScalar binom(const ExactScalar& upper, unsigned lower);

/// Integer binomial coefficient; zero when lower > upper.
BigInt binom(unsigned upper, unsigned lower);

BigInt factorial(unsigned n);

}  // namespace catmom
