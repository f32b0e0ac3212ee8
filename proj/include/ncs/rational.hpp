#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncs {

// Exact rational with arbitrary-precision numerator and denominator.
// mpq_class keeps the value canonical (reduced, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws ValidationError on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text: "p" when the value is an integer, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational factorial(unsigned n);

}  // namespace ncs
