#pragma once

#include <string_view>

#include "madhava/fixed_decimal.hpp"
#include "madhava/rational.hpp"

namespace madhava {

/// Circumference/diameter ratio, truncated (not rounded) after 50 decimal
/// places.  Every certified error bound in this library that references the
/// "true" value measures against this constant plus its own 10^-50 slack.
inline constexpr std::string_view pi_digits_text =
    "3.14159265358979323846264338327950288419716939937510";

/// Number of reliable fractional digits in pi_digits_text.
inline constexpr int pi_digits_available = 50;

/// The constant above truncated to `digits` fractional places (0..50).
FixedDecimal pi_fixed(int digits);

/// Same value as an exact rational.
Rational pi_rational(int digits);

/// A rational strictly above the true ratio: pi_rational(50) + 10^-50.
/// Useful for conservative range checks like |x| <= pi/2.
Rational pi_upper_bound();

}  // namespace madhava
