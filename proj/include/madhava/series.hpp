#pragma once

#include <vector>

#include "madhava/fixed_decimal.hpp"
#include "madhava/polynomial.hpp"
#include "madhava/rational.hpp"

namespace madhava::series {

enum class TrigKind { sine, cosine };

/// A truncated power-series approximant of sine or cosine produced by
/// iterated refinement.  Order m has highest degree 2m-1 (sine) or 2m-2
/// (cosine).
struct Expansion {
    TrigKind kind{};
    unsigned order = 0;
    RationalPolynomial polynomial;
};

/// One refinement step for sine: p -> x - double_integral(p).
/// Fixed point of the step is the full sine series.
RationalPolynomial refine_sine(const RationalPolynomial& previous);

/// One refinement step for cosine: p -> 1 - double_integral(p).
/// Fixed point of the step is the full cosine series.
RationalPolynomial refine_cosine(const RationalPolynomial& previous);

/// Order-m approximant: m-1 refinement steps from the seed (x for sine,
/// 1 for cosine).  order must be >= 1.
Expansion expansion(TrigKind kind, unsigned order);

/// Smallest order whose first omitted series term at argument magnitude
/// `abs_x` is below 10^-(precision+3).  Helper exposed for the evaluator's
/// tests.
unsigned sufficient_order(TrigKind kind, const Rational& abs_x, int precision);

/// Evaluates sine or cosine at x (radians, |x| <= pi/2) by building an
/// expansion of sufficient order, evaluating it exactly, and truncating to
/// `precision` digits.  The exact-evaluation error is below 10^-(precision+2),
/// so the returned digits are a faithful truncation of a value within one
/// ulp of the true function.  Throws std::domain_error outside the range.
FixedDecimal eval_trig(TrigKind kind, const Rational& x, int precision);

/// Same evaluation kept as an exact rational (the untruncated partial sum);
/// |result - true value| < 10^-(precision+2).  Internal building block for
/// oracles and tables.
Rational eval_trig_exact(TrigKind kind, const Rational& x, int precision);

/// Evaluates sine or cosine of (multiple * pi) for any rational multiple,
/// reducing exactly by symmetry to a first-quadrant argument before
/// evaluating.  precision <= 40 (limited by the stored pi digits).
FixedDecimal eval_trig_pi_multiple(TrigKind kind, const Rational& multiple, int precision);

}  // namespace madhava::series
