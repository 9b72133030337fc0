#pragma once

#include <gmpxx.h>

#include <string>

namespace shiftcurves {

using Integer = mpz_class;

// Exact arbitrary-precision fraction, always canonical (den > 0, gcd = 1).
// Backed by GMP's mpq_class; every helper below re-canonicalizes on entry.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// Parses "num" or "num/den" (den > 0 after canonicalization). Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical form: "num" when den == 1, otherwise "num/den".
std::string to_string(const Rational& q);

// Display-only conversion; exact values may exceed double range, in which
// case +-inf is returned.
double to_double_approx(const Rational& q);

// sign(x) * log(1 + |x|), computed without overflowing even for values with
// thousands of bits. Display-only (used by the signed-log render mode).
double signed_log_compress(const Rational& x);

}  // namespace shiftcurves
