#pragma once
// Exact rational scalars used everywhere in this library. All arithmetic is
// over Q; floating point never enters any computation.
#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace uae {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den, canonicalized. den must be nonzero.
Rational rat(long num, long den = 1);

// Accepts "p", "-p", "p/q", "-p/q" (whitespace not allowed). Returns nullopt
// on any other input, including zero denominators.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
// q > 0. parse_rational round-trips this exactly.
std::string to_string(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// (-1)^n as a plain int, used all over the closed-form summations.
inline int sign_pow(unsigned long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace uae
