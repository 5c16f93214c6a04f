#pragma once

#include <string>
#include <vector>

#include "madhava/fixed_decimal.hpp"
#include "madhava/rational.hpp"

namespace madhava::samskaram {

/// Successive iterates of a refinement scheme, one per step; the seed is
/// kept separately so iterates.size() equals the requested iteration count.
struct RefinementTrace {
    std::string method_tag;
    Rational seed;
    std::vector<Rational> iterates;

    const Rational& last() const { return iterates.back(); }
};

/// Partial geometric expansion of 1/(x - d) around the easier division 1/x:
///     1/x + d/x^2 + d^2/x^3 + ... + d^terms/x^(terms+1).
/// Requires x != 0 and |d| < |x| (outside that the expansion diverges and
/// refining makes things worse, so it is rejected).  The omitted remainder
/// is (d/x)^(terms+1) / (x - d): iterating `terms` upward refines the
/// correction without ever dividing by the awkward x - d.
Rational refine_reciprocal(const Rational& x, const Rational& d, unsigned terms);

/// Square-root refinement from a seed m with m^2 <= n (classically, m is the
/// largest integer whose square does not exceed n).  The first iterate adds
/// the first-order correction r/(2m) with r = n - m^2; later iterates repeat
/// the same correction pattern around the current value, which reproduces
/// the classical second-order formula
///     m + r/(2m) - (r/(2m))^2 / (2(m + r/(2m)))
/// at the second iterate.  iterations >= 1.
RefinementTrace sqrt_bakshali(const Rational& n, const Rational& seed, unsigned iterations);

/// Square-root refinement by averaging the over- and under-estimate:
///     x -> (x + n/x) / 2.
/// Any positive seed is accepted; iterations >= 1.
RefinementTrace sqrt_heron(const Rational& n, const Rational& seed, unsigned iterations);

/// Certified square root: returns a rational x with |x - sqrt(n)| < 10^-digits
/// (n > 0).  Internally Heron iterations from an integer seed, run until the
/// bracketing check (x - u)^2 < n with u = 10^-(digits+1) certifies the
/// error, then truncated to digits+2 places to keep the result small.
Rational sqrt_oracle(const Rational& n, int digits);

/// Side-by-side run of both square-root schemes from the same seed, judged
/// against sqrt_oracle.
struct SqrtComparison {
    RefinementTrace bakshali;
    RefinementTrace heron;
    Rational bakshali_error;  // |last iterate - oracle|
    Rational heron_error;
    int closer;  // -1: bakshali closer, +1: heron closer, 0: exact tie
};

SqrtComparison compare_sqrt_methods(const Rational& n, const Rational& seed,
                                    unsigned iterations, int oracle_digits = 30);

/// Coefficient of delta^power in the stepped cosine interpolation
///     cos(theta + delta) ~ sum_p delta^p * (cos_coefficient * cos(theta)
///                                           + sin_coefficient * sin(theta)).
struct InterpolationTerm {
    Rational cos_coefficient;
    Rational sin_coefficient;
};

/// Interpolation coefficients up to delta^order (order in 1..3).
///
/// Each step rewrites the residual, a shifted sine or cosine evaluated at
/// theta + delta/2^k, as its value at theta plus a residual shifted half as
/// far, halving the step factor and flipping the function each time:
///   order 1:  cos - delta*sin           (residual -delta*sin(theta+delta/2))
///   order 2:  ... - (1/2) delta^2 cos
///   order 3:  ... + (1/8) delta^3 sin
/// Orders above 3 are rejected: the scheme's halving pattern stops matching
/// the true series there, so extending it would sharpen nothing.
std::vector<InterpolationTerm> cosine_interpolation_coefficients(unsigned order);

/// Evaluates the stepped interpolation of cos(theta + delta) at `precision`
/// digits, using series evaluation of sin(theta), cos(theta) with guard
/// digits.  theta in radians, |theta| <= pi/2; order in 1..3.
FixedDecimal cosine_interpolate(const Rational& theta, const Rational& delta,
                                unsigned order, int precision);

}  // namespace madhava::samskaram
