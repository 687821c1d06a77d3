#ifndef WATCHTOWER_SCALAR_HPP
#define WATCHTOWER_SCALAR_HPP

#include <gmpxx.h>
#include <string>

namespace watchtower {

// Exact rational scalar. mpq_class keeps values canonical (reduced
// fraction, positive denominator) as long as they are built through
// arithmetic or canonicalize(); parse_scalar below guarantees it for
// external input.
using Scalar = mpq_class;

// Parses "p/q" fractions, plain integers, and decimal strings ("-3.25")
// into an exact rational. Throws Error{ParseError} on malformed input.
Scalar parse_scalar(const std::string& text);

// Canonical "p" or "p/q" rendering.
std::string to_fraction_string(const Scalar& v);

// Decimal rendering with the given number of significant digits
// (round-half-away-from-zero), e.g. 3/2 -> "1.50000000000" at 12 digits.
std::string to_decimal_string(const Scalar& v, int significant_digits = 12);

inline int sign(const Scalar& v) { return sgn(v); }

} // namespace watchtower

#endif
