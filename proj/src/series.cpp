#include "madhava/series.hpp"

#include <stdexcept>

#include "madhava/constants.hpp"

namespace madhava::series {

RationalPolynomial refine_sine(const RationalPolynomial& previous) {
    return RationalPolynomial::monomial(1, Rational(1)) - previous.double_integral();
}

RationalPolynomial refine_cosine(const RationalPolynomial& previous) {
    return RationalPolynomial::monomial(0, Rational(1)) - previous.double_integral();
}

Expansion expansion(TrigKind kind, unsigned order) {
    if (order == 0) throw std::domain_error("series: order must be at least 1");
    RationalPolynomial p = kind == TrigKind::sine ? RationalPolynomial::monomial(1, Rational(1))
                                                  : RationalPolynomial::monomial(0, Rational(1));
    for (unsigned step = 1; step < order; ++step)
        p = kind == TrigKind::sine ? refine_sine(p) : refine_cosine(p);
    return Expansion{kind, order, std::move(p)};
}

unsigned sufficient_order(TrigKind kind, const Rational& abs_x, int precision) {
    if (precision < 0) throw std::invalid_argument("series: negative precision");
    const Rational bound(Integer(1), pow10(static_cast<unsigned long>(precision) + 3));
    const Rational x2 = abs_x * abs_x;
    // First omitted term of the order-m approximant has degree 2m+1 (sine)
    // or 2m (cosine); walk m upward until it drops below the bound.  For
    // |x| <= pi/2 the term ratio is already < 1 at m = 1, so the first m
    // that gets under the bound certifies the whole tail.
    Rational term = kind == TrigKind::sine ? abs_x * x2 / Rational(6) : x2 / Rational(2);
    unsigned long degree = kind == TrigKind::sine ? 3 : 2;
    unsigned order = 1;
    while (term >= bound) {
        term = term * x2 / Rational(Integer(degree + 1)) / Rational(Integer(degree + 2));
        degree += 2;
        ++order;
    }
    return order;
}

namespace {

void check_range(const Rational& x) {
    if (Rational(2) * x.abs() > pi_upper_bound())
        throw std::domain_error("series: argument magnitude exceeds pi/2");
}

}  // namespace

Rational eval_trig_exact(TrigKind kind, const Rational& x, int precision) {
    check_range(x);
    const unsigned order = sufficient_order(kind, x.abs(), precision);
    // For |x| <= pi/2 the series alternates with strictly shrinking terms,
    // so the partial sum is within the first omitted term, 10^-(precision+3),
    // of the true value.
    return expansion(kind, order).polynomial.evaluate(x);
}

FixedDecimal eval_trig(TrigKind kind, const Rational& x, int precision) {
    return FixedDecimal::truncate_from(eval_trig_exact(kind, x, precision), precision);
}

namespace {

Integer floor_rational(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

}  // namespace

FixedDecimal eval_trig_pi_multiple(TrigKind kind, const Rational& multiple, int precision) {
    if (precision < 0 || precision > 40)
        throw std::invalid_argument("series: pi-multiple evaluation supports 0..40 digits");

    // Exact symmetry reduction of q = multiple into [0, 1/2]: periodicity
    // first, then sin(pi - t) = sin t / cos(pi - t) = -cos t.
    Rational q = multiple - Rational(2) * Rational(floor_rational(multiple / Rational(2)));
    int sign = 1;
    if (q >= Rational(1)) {
        q -= Rational(1);
        sign = -sign;
    }
    if (q > Rational(1, 2)) {
        q = Rational(1) - q;
        if (kind == TrigKind::cosine) sign = -sign;
    }

    // Angles with exactly representable values render exactly.
    if (q.is_zero())
        return FixedDecimal(Integer(sign * (kind == TrigKind::sine ? 0 : 1)) * pow10(precision),
                            precision);
    if (q == Rational(1, 2))
        return FixedDecimal(Integer(sign * (kind == TrigKind::sine ? 1 : 0)) * pow10(precision),
                            precision);

    // Substitute the 50-digit ratio for pi; the argument error is below
    // 10^-50 and the function's slope is at most 1, so with four guard
    // digits the total error stays under 10^-(precision+3).
    const Rational x = q * pi_rational(pi_digits_available);
    Rational value = eval_trig_exact(kind, x, precision + 4);
    if (sign < 0) value = -value;

    // The target is the true function of the true angle.  When that target
    // sits on (or within certified error of) a `precision`-digit boundary,
    // truncating the approximant could lose a whole trailing run of 9s or
    // 0s, so values that close to a boundary snap to it: sin(pi/6) prints
    // 0.500000000000, not 0.499999999999.
    const Rational scaled = value * Rational(pow10(precision));
    const Integer nearest = floor_rational(scaled + Rational(1, 2));
    const Rational distance = (scaled - Rational(nearest)).abs();
    if (distance * Rational(pow10(3)) <= Rational(1))
        return FixedDecimal(nearest, precision);
    return FixedDecimal::truncate_from(value, precision);
}

}  // namespace madhava::series
