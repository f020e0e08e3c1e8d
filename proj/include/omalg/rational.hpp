#pragma once

#include <gmpxx.h>

#include <string>

namespace omalg {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" (decimal, optionally negative) into a canonical rational.
Rat parse_rational(const std::string& text);

/// Renders a rational as "p" or "p/q".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

Int binomial(long n, long k);

/// Catalan number c_k = C(2k-2, k-1) / k, k >= 1.
Int catalan(long k);

/// Base-2 logarithm of |r|, accurate for rationals far outside double range.
double log2_abs(const Rat& r);

}  // namespace omalg
