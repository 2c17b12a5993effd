#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace phg {

using Int = boost::multiprecision::cpp_int;

// Exact rational number, kept in canonical form: lowest terms, denominator
// strictly positive, zero represented as 0/1. The backing type maintains the
// canonical form automatically after every arithmetic operation.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den with manual sign normalization. Throws ErrorKind::Domain on
// den == 0 (the backing type's own constructor would reject a negative
// denominator outright).
Rational make_rational(Int num, Int den);

// Parses "p" or "p/q" with optional signs and surrounding whitespace.
// Throws ErrorKind::Parse with the offending text on malformed input and
// ErrorKind::Domain on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Decimal rendering with the given number of fractional digits, half-up
// rounding. Display helper only; never used in comparisons.
std::string to_decimal_string(const Rational& value, int digits);

Int numerator(const Rational& value);
Int denominator(const Rational& value);

// base^exp by repeated multiplication (the backing library has no pow for
// rational bases). exp is a small non-negative integer.
Rational pow_rational(const Rational& base, unsigned exp);

// Exact square root if value is a perfect square of a rational, nullopt
// otherwise. Only defined for non-negative input.
std::optional<Rational> exact_sqrt(const Rational& value);

bool in_unit_interval(const Rational& value); // 0 <= value <= 1

Int lcm_int(const Int& a, const Int& b);

} // namespace phg
