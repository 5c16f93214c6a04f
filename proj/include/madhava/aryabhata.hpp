#pragma once

#include <vector>

#include "madhava/fixed_decimal.hpp"
#include "madhava/rational.hpp"

namespace madhava::aryabhata {

/// How the leading table entries (and thereby the whole error profile of
/// the difference recursion) are obtained.
enum class SeedPolicy {
    epsilon,   // s_1 = epsilon: the small-angle approximation sin(e) ~ e
    two_term,  // s_1 = epsilon and additionally s_2 = 2*epsilon (sin(2e) ~ 2e);
               // the recursion takes over from the seeded pair
    oracle,    // s_1 = series-evaluated sin(epsilon): isolates recursion error
};

struct SineTableEntry {
    unsigned index = 0;            // n
    Rational angle_pi_multiple;    // n * step, as a multiple of pi
    FixedDecimal value;            // tabulated sin(n*step*pi) (or cos)
};

/// Table of equally spaced sine (or cosine) values built by the
/// second-difference recursion rather than by evaluating each entry:
///     delta s_n = delta s_{n-1} - multiplier * s_n,  s_{n+1} = s_n + delta s_n
/// with multiplier = 4 sin^2(step/2) held as an exact rational at guard
/// precision.  Only the seed entry carries approximation error; the
/// recursion itself is the exact three-term identity every sine satisfies,
/// so the seed's relative error propagates unchanged (entries are otherwise
/// faithful truncations).
struct SineTable {
    Rational step_pi_multiple;     // epsilon as a multiple of pi
    int precision = 0;             // display digits of `value`
    SeedPolicy seed = SeedPolicy::epsilon;
    unsigned first_index = 0;      // 1 for sine tables, 0 for cosine tables
    Rational difference_multiplier;      // 4 sin^2(step/2), quantized
    std::vector<SineTableEntry> entries;
    std::vector<Rational> exact_values;  // recursion values before display truncation
};

/// `count` sine entries at angles step*pi, 2*step*pi, ... (step a rational
/// multiple of pi, step*count <= 1/2 so the table stays inside the first
/// quadrant).  precision limited to 40 by the stored pi digits.
SineTable generate_sine_table(const Rational& step_pi_multiple, unsigned count,
                              int precision, SeedPolicy seed = SeedPolicy::epsilon);

/// `count` cosine entries at angles 0, step*pi, 2*step*pi, ...  The cosine
/// seed pair is exact up to the multiplier's quantization (cos 0 = 1,
/// cos step = 1 - multiplier/2), so no seed policy applies.
SineTable generate_cosine_table(const Rational& step_pi_multiple, unsigned count,
                                int precision);

/// Symmetric sine difference via the product identity
///     sin(phi + delta) - sin(phi - delta) = 2 sin(delta) cos(phi),
/// evaluated as the right-hand side by series at `precision` digits.
/// phi, delta in radians, |phi|, |delta| <= pi/2.
FixedDecimal sine_difference(const Rational& phi, const Rational& delta, int precision);

/// Symmetric difference quotient (f_plus - f_minus) / window, the window
/// being the full spacing between the two samples.  Computed exactly from
/// the decimal inputs, then truncated to `precision` digits.
FixedDecimal central_first_derivative(const FixedDecimal& f_plus,
                                      const FixedDecimal& f_minus,
                                      const FixedDecimal& window, int precision);

/// A worked central-difference estimate of cos(phi) from sine samples at
/// phi +/- half_window, kept with its ingredients.
struct DifferenceSample {
    Rational phi;
    Rational half_window;
    FixedDecimal f_plus;    // sin(phi + half_window)
    FixedDecimal f_minus;   // sin(phi - half_window)
    FixedDecimal f_center;  // sin(phi)
    FixedDecimal estimate;  // (f_plus - f_minus) / (2 * half_window)
};

DifferenceSample central_difference_sample(const Rational& phi, const Rational& half_window,
                                           int precision);

/// Ratio of centered second difference to value,
///     (s_{n+1} - 2 s_n + s_{n-1}) / s_n,
/// from the table's exact recursion values, truncated at the table's
/// precision.  Equals -difference_multiplier for every interior n (the
/// untruncated ratio exactly), which is the discrete form of sin'' = -sin.
/// `index` is the entry index n; its neighbours must exist and s_n must be
/// nonzero.
FixedDecimal second_difference_ratio(const SineTable& table, unsigned index);

}  // namespace madhava::aryabhata
