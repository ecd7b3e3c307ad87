#pragma once

#include <gmpxx.h>

#include <string>

namespace equiform {

/// Exact arbitrary-precision rational. All symbolic coefficients in the
/// library are Rational; floating point appears only behind evaluation.
using Rational = mpq_class;

/// Parses "2", "-7/3", "0.125" or "1.5e-3" into an exact value.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational rational_from_string(const std::string& text);

/// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double value);

/// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace equiform
