#pragma once

#include <gmpxx.h>

#include <string>

namespace aclab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// base^exp for exp >= 0 (0^0 == 1).
Rational pow(const Rational& base, unsigned exp);
BigInt pow(const BigInt& base, unsigned exp);

/// n! as an exact integer; memoized, thread-safe.
const BigInt& factorial(unsigned n);

/// "p/q" (or "p" when q == 1) in lowest terms.
std::string to_string(const Rational& value);

/// Parses "p/q" or "p"; throws InputError on malformed text.
Rational parse_rational(const std::string& text);

}  // namespace aclab
