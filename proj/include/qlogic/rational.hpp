#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlogic {

/// Exact rational number. All probabilities, spectra and moments use it.
using Rational = mpq_class;

/// Parses an integer, an `n/d` fraction or a decimal literal (`-0.125`)
/// into an exact rational. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical rendering: `n` for integers, `n/d` otherwise (always reduced).
std::string to_string(const Rational& value);

/// Decimal rendering rounded to `digits` places, for human-facing reports.
std::string to_decimal(const Rational& value, int digits = 6);

double to_double(const Rational& value);

inline bool is_probability(const Rational& value) { return value >= 0 && value <= 1; }

}  // namespace qlogic
