#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rhombus {

// Arbitrary-precision carriers for every exact code path. GMP's mpq_class keeps
// rationals canonical (reduced, positive denominator) after each arithmetic op.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a reduced rational from an integer pair. den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "num/den" or a plain integer. Throws rhombus::Error on malformed input.
Rational parse_rational(std::string_view token);

/// Always renders as "num/den", e.g. "0/1", "-3/2".
std::string format_rational(const Rational& q);

inline int compare(const Rational& a, const Rational& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }

}  // namespace rhombus
