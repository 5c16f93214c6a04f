#pragma once

#include <string>
#include <string_view>

#include "madhava/rational.hpp"

namespace madhava {

/**
 * Fixed-point decimal: an Integer scaled by 10^-precision.
 *
 * The value represented is scaled() / 10^precision().  Conversions from
 * Rational truncate toward zero, mirroring how a scribe working a fixed
 * number of sexagesimal or decimal places discards the tail rather than
 * rounding it.  Arithmetic between operands of different precision carries
 * the finer precision through, and every result is truncated (never
 * rounded) to that precision.
 *
 * str() renders the truncated digits exactly; str_rounded() is a separate,
 * display-only round-to-nearest rendering for quoting results at fewer
 * digits than were carried.
 */
class FixedDecimal {
public:
    FixedDecimal() : scaled_(0), precision_(0) {}
    FixedDecimal(Integer scaled, int precision);

    /// Truncation (toward zero) of an exact rational at `precision` digits.
    static FixedDecimal truncate_from(const Rational& value, int precision);

    /// Parses decimal text like "3.1428", "-0.33333", "12".  The precision
    /// is the number of digits after the point.  Throws std::invalid_argument
    /// on malformed input.
    static FixedDecimal parse(std::string_view text);

    const Integer& scaled() const { return scaled_; }
    int precision() const { return precision_; }

    /// Exact rational value scaled() / 10^precision().
    Rational to_rational() const;

    /// Same value re-expressed at `new_precision`; truncates toward zero
    /// when digits are dropped.
    FixedDecimal rescaled(int new_precision) const;

    bool is_zero() const { return sgn(scaled_) == 0; }
    int sign() const { return sgn(scaled_); }

    FixedDecimal operator-() const { return FixedDecimal(Integer(-scaled_), precision_); }

    // Result precision is max(precision of operands); results truncate.
    friend FixedDecimal operator+(const FixedDecimal& a, const FixedDecimal& b);
    friend FixedDecimal operator-(const FixedDecimal& a, const FixedDecimal& b);
    friend FixedDecimal operator*(const FixedDecimal& a, const FixedDecimal& b);
    friend FixedDecimal operator/(const FixedDecimal& a, const FixedDecimal& b);

    // Comparisons are exact (operands are cross-scaled, never truncated).
    friend bool operator==(const FixedDecimal& a, const FixedDecimal& b);
    friend std::strong_ordering operator<=>(const FixedDecimal& a, const FixedDecimal& b);

    /// Exact rendering of the carried digits, e.g. "0.33333", "-2.50".
    /// Always shows precision() digits after the point (none if zero).
    std::string str() const;

    /// Display-only rendering rounded to nearest (ties away from zero) at
    /// `digits` places.  Does not change the stored value.
    std::string str_rounded(int digits) const;

private:
    Integer scaled_;
    int precision_;
};

/// Spec'd conversion entry point; truncates toward zero.
inline FixedDecimal to_fixed(const Rational& value, int precision) {
    return FixedDecimal::truncate_from(value, precision);
}

}  // namespace madhava
