#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace troplin {

using Rational = mpq_class;

// Accepts "p", "p/q", and decimal forms such as "0.125", "-3.5e2".
// The result is canonicalized. Throws SchemaError on malformed text.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

// Shortest decimal string that round-trips through strtod.
std::string format_double(double value);

double parse_double(std::string_view text);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace troplin
