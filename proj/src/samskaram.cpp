#include "madhava/samskaram.hpp"

#include <stdexcept>
#include <utility>

#include "madhava/series.hpp"

namespace madhava::samskaram {

Rational refine_reciprocal(const Rational& x, const Rational& d, unsigned terms) {
    if (x.is_zero()) throw std::domain_error("reciprocal refinement: x must be nonzero");
    if (d.abs() >= x.abs())
        throw std::domain_error("reciprocal refinement: |d| >= |x| is the divergent regime");
    // Horner form of 1/x * (1 + r + r^2 + ... + r^terms) with r = d/x.
    const Rational ratio = d / x;
    Rational sum(1);
    for (unsigned i = 0; i < terms; ++i) sum = Rational(1) + ratio * sum;
    return sum / x;
}

namespace {

void check_sqrt_inputs(const Rational& n, const Rational& seed, unsigned iterations) {
    if (n.sign() <= 0) throw std::domain_error("square root: n must be positive");
    if (seed.sign() <= 0) throw std::domain_error("square root: seed must be positive");
    if (iterations == 0) throw std::domain_error("square root: need at least one iteration");
}

}  // namespace

RefinementTrace sqrt_bakshali(const Rational& n, const Rational& seed, unsigned iterations) {
    check_sqrt_inputs(n, seed, iterations);
    if (seed * seed > n)
        throw std::domain_error("square root: seed must satisfy seed^2 <= n");
    RefinementTrace trace{"bakshali", seed, {}};
    Rational x = seed;
    for (unsigned i = 0; i < iterations; ++i) {
        // Residual r = n - x^2; the half-correction r/(2x) is the linear
        // term of sqrt(x^2 + r).  Repeating it around the refreshed iterate
        // reproduces the classical two-step formula exactly (the second
        // step's  - (r/2x)^2 / (2(x + r/2x))  is this same correction with
        // the new residual written out).
        Rational r = n - x * x;
        x = x + r / (Rational(2) * x);
        trace.iterates.push_back(x);
    }
    return trace;
}

RefinementTrace sqrt_heron(const Rational& n, const Rational& seed, unsigned iterations) {
    check_sqrt_inputs(n, seed, iterations);
    RefinementTrace trace{"heron", seed, {}};
    Rational x = seed;
    for (unsigned i = 0; i < iterations; ++i) {
        x = (x + n / x) / Rational(2);
        trace.iterates.push_back(x);
    }
    return trace;
}

Rational sqrt_oracle(const Rational& n, int digits) {
    if (n.sign() <= 0) throw std::domain_error("square root: n must be positive");
    if (digits < 0) throw std::invalid_argument("square root: negative precision");

    // Integer seed one above floor(sqrt(floor(n))): guaranteed >= sqrt(n),
    // and every averaging step stays >= sqrt(n), decreasing monotonically.
    Integer coarse;
    Integer whole = n.numerator() / n.denominator();  // floor for positive n
    mpz_sqrt(coarse.get_mpz_t(), whole.get_mpz_t());
    Rational x(Integer(coarse + 1));

    const Rational u(Integer(1), pow10(static_cast<unsigned long>(digits) + 1));
    // (x - u)^2 < n certifies sqrt(n) in (x - u, x].
    while ((x - u) * (x - u) >= n) x = (x + n / x) / Rational(2);

    // Truncate to digits+2 places to keep the certified value small; this
    // moves it by at most 10^-(digits+2), preserving |x - sqrt(n)| < 10^-digits.
    return FixedDecimal::truncate_from(x, digits + 2).to_rational();
}

SqrtComparison compare_sqrt_methods(const Rational& n, const Rational& seed,
                                    unsigned iterations, int oracle_digits) {
    SqrtComparison out{sqrt_bakshali(n, seed, iterations), sqrt_heron(n, seed, iterations),
                       Rational(), Rational(), 0};
    const Rational reference = sqrt_oracle(n, oracle_digits);
    out.bakshali_error = (out.bakshali.last() - reference).abs();
    out.heron_error = (out.heron.last() - reference).abs();
    if (out.bakshali_error < out.heron_error)
        out.closer = -1;
    else if (out.heron_error < out.bakshali_error)
        out.closer = 1;
    return out;
}

std::vector<InterpolationTerm> cosine_interpolation_coefficients(unsigned order) {
    if (order < 1 || order > 3)
        throw std::domain_error("interpolation: order must be between 1 and 3");
    std::vector<InterpolationTerm> terms(order + 1);
    terms[0] = {Rational(1), Rational(0)};  // the cos(theta) anchor

    // Residual after the anchor: -delta * sin(theta + delta/2), tracked as
    // (factor, which function, shift denominator 2^step).  Each round drops
    // the shift to materialise the coefficient at theta, then expands the
    // shifted function one level deeper:
    //   sin(theta + s) = sin theta + s cos(theta + s/2)
    //   cos(theta + s) = cos theta - s sin(theta + s/2)
    // which multiplies the factor by +-s = +-delta/2^step and flips the kind.
    Rational factor(-1);
    bool residual_is_sine = true;
    for (unsigned step = 1; step <= order; ++step) {
        if (residual_is_sine)
            terms[step].sin_coefficient += factor;
        else
            terms[step].cos_coefficient += factor;
        factor = factor * Rational(residual_is_sine ? 1L : -1L, 1L << step);
        residual_is_sine = !residual_is_sine;
    }
    return terms;
}

FixedDecimal cosine_interpolate(const Rational& theta, const Rational& delta,
                                unsigned order, int precision) {
    if (precision < 0) throw std::invalid_argument("interpolation: negative precision");
    const auto coefficients = cosine_interpolation_coefficients(order);
    const Rational sin_theta = series::eval_trig_exact(series::TrigKind::sine, theta, precision + 6);
    const Rational cos_theta = series::eval_trig_exact(series::TrigKind::cosine, theta, precision + 6);
    Rational sum;
    Rational delta_power(1);
    for (const auto& term : coefficients) {
        sum += delta_power * (term.cos_coefficient * cos_theta + term.sin_coefficient * sin_theta);
        delta_power *= delta;
    }
    return FixedDecimal::truncate_from(sum, precision);
}

}  // namespace madhava::samskaram
