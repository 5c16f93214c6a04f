#pragma once

#include "madhava/fixed_decimal.hpp"
#include "madhava/rational.hpp"
#include "madhava/summation.hpp"

namespace madhava::samkalitam {

using summation::Mode;

/// S_N(k) = 1^k + 2^k + ... + N^k together with its normalized form.
struct PowerSumRecord {
    unsigned long upper = 0;      // N
    unsigned power = 0;           // k
    Integer sum;                  // S_N(k)
    Rational normalized;          // S_N(k) / N^(k+1)
    Rational limit;               // 1 / (k+1), the N->inf value
};

/// Direct evaluation of S_N(k).
PowerSumRecord power_sum(unsigned long upper, unsigned power, Mode mode = Mode::serial);

/// Same sum via the recursion
///     S_N(k) = N * S_N(k-1) - sum_{n=1}^{N-1} S_n(k-1),
/// peeling one power at a time down to S_n(0) = n.  Sequential by nature:
/// each row of partial sums feeds the next.
PowerSumRecord power_sum_recursive(unsigned long upper, unsigned power);

/// Both sides of the rearrangement identity behind the recursion:
///     N * S_N(k-1) - S_N(k) = sum_{n=1}^{N-1} sum_{j=1}^{n} j^(k-1).
/// Requires power >= 1.  The equality is exact for every N, k.
struct AbelSides {
    Integer lhs;
    Integer rhs;
};

AbelSides abel_identity_check(unsigned long upper, unsigned power);

/// S_N(k)/N^(k+1) - 1/(k+1): how far the normalized sum still is from its
/// limit at finite N.  Positive, and at most 1/N, for all k >= 0, N >= 1.
Rational j_limit_deviation(unsigned long upper, unsigned power);

/// A truncated series value with its certified tail bound.
struct SeriesResult {
    Rational partial_sum;
    unsigned long terms_used = 0;
    Rational error_bound;  // first omitted term, a strict bound on the tail
};

/// The alternating odd-reciprocal series for the quarter circle:
///     1 - 1/3 + 1/5 - ... (terms summands), partial_sum ~ pi/4,
/// with error_bound = 1/(2*terms+1).  `pi_estimate` is 4*partial_sum
/// truncated to `precision` digits.
struct PiApproximation {
    SeriesResult series;
    FixedDecimal pi_estimate;
};

PiApproximation madhava_pi(unsigned long terms, int precision, Mode mode = Mode::serial);

/// Same series accumulated directly in scaled-integer decimals instead of
/// exact rationals: each term 4/(2j+1) is truncated at `working` digits
/// (precision + lg(terms) + 4 guard digits) before accumulation.  Orders of
/// magnitude faster at large `terms`; the certified bound inflates by the
/// accumulated truncation slack terms*10^-working.
struct DecimalPiApproximation {
    FixedDecimal pi_estimate;      // at `precision` digits
    unsigned long terms_used = 0;
    Rational error_bound;          // 4/(2M+1) + (M+1)*10^-working
};

DecimalPiApproximation madhava_pi_decimal(unsigned long terms, int precision,
                                          Mode mode = Mode::serial);

/// Gregory series t - t^3/3 + t^5/5 - ... for arctan(t), 0 < t <= 1.
/// error_bound is the first omitted term t^(2M+1)/(2M+1); the summation
/// asserts the term magnitudes actually decrease as the bound's alternating-
/// series argument requires.
SeriesResult arctan_series(const Rational& t, unsigned long terms);

/// Certified arctangent for t in [0, 1]: |result - arctan(t)| < 10^-digits.
/// Direct series for t <= 1/2; otherwise reduced through
/// arctan(t) = pi/4 + arctan((t-1)/(1+t)), whose argument lies in [-1/3, 0],
/// so the series tail shrinks geometrically either way.
Rational arctan_oracle(const Rational& t, int digits);

/// One segment of the unit quarter circle cut into `segments` equal vertical
/// strips: the chord geometry at strip `index` (1-based).
struct QuadrantSample {
    unsigned long segments = 0;       // N
    unsigned long index = 0;          // n
    Rational oa_sq_prev;              // OA_{n-1}^2 = 1 + ((n-1)/N)^2
    Rational oa_sq;                   // OA_n^2     = 1 + (n/N)^2
    Rational predicted_sin_delta;     // N / (N^2 + n^2)
    Rational refined_prediction;      // (1/N) / (OA_n * OA_{n-1}), via sqrt_oracle
    Rational true_sin_delta;          // sin(arctan(n/N) - arctan((n-1)/N)), via oracles
};

QuadrantSample quadrant_geometry(unsigned long segments, unsigned long index,
                                 int oracle_digits = 30);

/// Sum over all segments of predicted_sin_delta: sum_n N/(N^2+n^2), the
/// stepped-chord estimate of the quarter arc (-> pi/4 from below).
Rational quadrant_predicted_sum(unsigned long segments, Mode mode = Mode::serial);

}  // namespace madhava::samkalitam
