#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tensegrity {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator; values built from raw numerator/denominator pairs
/// must go through make_rational().
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" with decimal integers. Anything else throws
/// std::invalid_argument; a decimal point yields "floating point forbidden".
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace tensegrity
