#include "madhava/samkalitam.hpp"

#include <stdexcept>
#include <vector>

#include "madhava/constants.hpp"
#include "madhava/series.hpp"
#include "madhava/samskaram.hpp"

namespace madhava::samkalitam {

namespace {

void check_upper(unsigned long upper) {
    if (upper == 0) throw std::domain_error("power sum: upper limit must be at least 1");
}

Integer int_pow(unsigned long base, unsigned exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

PowerSumRecord make_record(unsigned long upper, unsigned power, Integer sum) {
    PowerSumRecord rec;
    rec.upper = upper;
    rec.power = power;
    rec.sum = std::move(sum);
    rec.normalized = Rational(rec.sum, int_pow(upper, power + 1));
    rec.limit = Rational(1L, static_cast<long>(power) + 1);
    return rec;
}

}  // namespace

PowerSumRecord power_sum(unsigned long upper, unsigned power, Mode mode) {
    check_upper(upper);
    Integer sum = summation::reduce<Integer>(
        upper, [power](std::size_t i) { return int_pow(i + 1, power); }, mode);
    return make_record(upper, power, std::move(sum));
}

PowerSumRecord power_sum_recursive(unsigned long upper, unsigned power) {
    check_upper(upper);
    // row[n-1] holds S_n(j); each round lifts j by one via
    //   S_n(j) = n * S_n(j-1) - sum_{m=1}^{n-1} S_m(j-1),
    // consuming the previous row left to right with a running prefix sum.
    std::vector<Integer> row(upper);
    for (unsigned long n = 1; n <= upper; ++n) row[n - 1] = n;
    for (unsigned j = 1; j <= power; ++j) {
        Integer prefix = 0;
        for (unsigned long n = 1; n <= upper; ++n) {
            Integer lifted = n * row[n - 1] - prefix;
            prefix += row[n - 1];
            row[n - 1] = std::move(lifted);
        }
    }
    return make_record(upper, power, std::move(row[upper - 1]));
}

AbelSides abel_identity_check(unsigned long upper, unsigned power) {
    check_upper(upper);
    if (power == 0) throw std::domain_error("power sum: identity needs power >= 1");
    // lhs: N * S_N(k-1) - S_N(k); rhs: the same mass regrouped as
    // sum_{n<N} S_n(k-1), i.e. a prefix-sum of prefix-sums.
    AbelSides sides;
    Integer s_low = 0, s_high = 0, prefix_of_prefix = 0;
    for (unsigned long n = 1; n <= upper; ++n) {
        if (n > 1) prefix_of_prefix += s_low;  // after n-1 terms: sum_{m<n} S_m(k-1)
        Integer p = int_pow(n, power - 1);
        s_high += p * n;
        s_low += p;
    }
    sides.lhs = upper * s_low - s_high;
    sides.rhs = std::move(prefix_of_prefix);
    return sides;
}

Rational j_limit_deviation(unsigned long upper, unsigned power) {
    PowerSumRecord rec = power_sum(upper, power);
    return rec.normalized - rec.limit;
}

PiApproximation madhava_pi(unsigned long terms, int precision, Mode mode) {
    if (terms == 0) throw std::domain_error("pi series: need at least one term");
    if (precision < 0) throw std::invalid_argument("pi series: negative precision");
    // Term magnitudes 1/(2j+1) shrink strictly by construction, which is
    // what lets the first omitted term bound the whole alternating tail.
    Rational partial = summation::reduce<Rational>(
        terms,
        [](std::size_t j) {
            Rational term(1L, 2 * static_cast<long>(j) + 1);
            return j % 2 == 0 ? term : -term;
        },
        mode);
    PiApproximation out;
    out.series.partial_sum = partial;
    out.series.terms_used = terms;
    out.series.error_bound = Rational(Integer(1), Integer(2) * terms + 1);
    out.pi_estimate = FixedDecimal::truncate_from(Rational(4) * partial, precision);
    return out;
}

DecimalPiApproximation madhava_pi_decimal(unsigned long terms, int precision, Mode mode) {
    if (terms == 0) throw std::domain_error("pi series: need at least one term");
    if (precision < 0) throw std::invalid_argument("pi series: negative precision");
    unsigned long guard = 4;
    for (unsigned long t = terms; t > 0; t /= 10) ++guard;  // + lg(terms)
    const unsigned long working = static_cast<unsigned long>(precision) + guard;
    const Integer four_scaled = 4 * pow10(working);
    // Each term is truncated toward zero at `working` digits before it is
    // accumulated, so the sum carries at most `terms` lost ulps -- accounted
    // for in error_bound below.
    Integer acc = summation::reduce<Integer>(
        terms,
        [&four_scaled](std::size_t j) {
            Integer term;
            mpz_tdiv_q_ui(term.get_mpz_t(), four_scaled.get_mpz_t(),
                          2 * static_cast<unsigned long>(j) + 1);
            return j % 2 == 0 ? term : Integer(-term);
        },
        mode);
    DecimalPiApproximation out;
    out.pi_estimate = FixedDecimal(std::move(acc), static_cast<int>(working)).rescaled(precision);
    out.terms_used = terms;
    out.error_bound = Rational(Integer(4), Integer(2) * terms + 1) +
                      Rational(Integer(terms) + 1, pow10(working));
    return out;
}

SeriesResult arctan_series(const Rational& t, unsigned long terms) {
    if (terms == 0) throw std::domain_error("arctangent series: need at least one term");
    if (t.sign() < 0 || t > Rational(1))
        throw std::domain_error("arctangent series: argument outside derived domain [0, 1]");
    const Rational t_squared = t * t;
    Rational power = t;  // t^(2j+1)
    Rational sum;
    Rational previous_magnitude;
    for (unsigned long j = 0; j < terms; ++j) {
        Rational term = power / Rational(Integer(2 * j + 1));
        // The first-omitted-term bound leans on the alternating series
        // having decreasing terms; check it as we go rather than assume it.
        if (j > 0 && term > previous_magnitude)
            throw std::logic_error("arctangent series: term magnitudes failed to decrease");
        sum += j % 2 == 0 ? term : -term;
        previous_magnitude = std::move(term);
        power *= t_squared;
    }
    SeriesResult out;
    out.partial_sum = std::move(sum);
    out.terms_used = terms;
    out.error_bound = power / Rational(Integer(2 * terms + 1));
    return out;
}

namespace {

// Partial Gregory series for arctan(u), 0 < u <= 1/2 say, summed until the
// first omitted term drops under `tail`.  Alternating with decreasing
// terms, so |result - arctan(u)| < tail.
Rational arctan_partial_below(const Rational& u, const Rational& tail) {
    const Rational u_squared = u * u;
    Rational power = u;
    Rational sum;
    unsigned long j = 0;
    while (true) {
        Rational term = power / Rational(Integer(2 * j + 1));
        if (term < tail) break;
        sum += j % 2 == 0 ? term : -term;
        power *= u_squared;
        ++j;
    }
    return sum;
}

}  // namespace

Rational arctan_oracle(const Rational& t, int digits) {
    if (t.sign() < 0 || t > Rational(1))
        throw std::domain_error("arctangent oracle: argument must lie in [0, 1]");
    if (digits < 0 || digits > 45)
        throw std::invalid_argument("arctangent oracle: supports 0..45 digits");
    if (t.is_zero()) return Rational();
    const Rational tail(Integer(1), pow10(static_cast<unsigned long>(digits) + 2));
    if (t <= Rational(1, 2)) return arctan_partial_below(t, tail);
    // arctan(t) = pi/4 + arctan((t-1)/(1+t)); the reduced argument lies in
    // [-1/3, 0], so the series converges geometrically even at t = 1 where
    // the direct series is hopeless.  pi/4 contributes < 10^-50 extra error.
    const Rational reduced = (Rational(1) - t) / (Rational(1) + t);
    return pi_rational(pi_digits_available) / Rational(4) - arctan_partial_below(reduced, tail);
}

QuadrantSample quadrant_geometry(unsigned long segments, unsigned long index, int oracle_digits) {
    if (segments == 0) throw std::domain_error("quadrant: need at least one segment");
    if (index == 0 || index > segments)
        throw std::domain_error("quadrant: segment index out of range");
    if (oracle_digits < 1 || oracle_digits > 40)
        throw std::invalid_argument("quadrant: oracle digits must be 1..40");

    const Integer n(index), N(segments);
    QuadrantSample s;
    s.segments = segments;
    s.index = index;
    s.oa_sq_prev = Rational(N * N + (n - 1) * (n - 1), N * N);
    s.oa_sq = Rational(N * N + n * n, N * N);
    s.predicted_sin_delta = Rational(N, N * N + n * n);

    const int guard = oracle_digits + 2;
    const Rational oa = samskaram::sqrt_oracle(s.oa_sq, guard);
    const Rational oa_prev = samskaram::sqrt_oracle(s.oa_sq_prev, guard);
    s.refined_prediction = Rational(Integer(1), N) / (oa * oa_prev);

    const Rational angle = arctan_oracle(Rational(n, N), guard) -
                           arctan_oracle(Rational(n - 1, N), guard);
    s.true_sin_delta = series::eval_trig_exact(series::TrigKind::sine, angle, guard);
    return s;
}

Rational quadrant_predicted_sum(unsigned long segments, Mode mode) {
    if (segments == 0) throw std::domain_error("quadrant: need at least one segment");
    const Integer N(segments);
    const Integer N_squared = N * N;
    return summation::reduce<Rational>(
        segments,
        [&](std::size_t j) {
            const Integer n(j + 1);
            return Rational(N, N_squared + n * n);
        },
        mode);
}

}  // namespace madhava::samkalitam
