#include "madhava/aryabhata.hpp"

#include <stdexcept>

#include "madhava/constants.hpp"
#include "madhava/series.hpp"

namespace madhava::aryabhata {

namespace {

constexpr int guard_digits = 10;

Rational quantize(const Rational& value, int digits) {
    return FixedDecimal::truncate_from(value, digits).to_rational();
}

SineTable build_table(bool cosine, const Rational& step_pi_multiple, unsigned count,
                      int precision, SeedPolicy policy) {
    if (step_pi_multiple.sign() <= 0)
        throw std::domain_error("table: step must be positive");
    if (count == 0) throw std::domain_error("table: need at least one entry");
    if (precision < 4 || precision > 40)
        throw std::domain_error("table: precision must be between 4 and 40");
    const unsigned long last_index = cosine ? count - 1 : count;
    if (Rational(Integer(last_index)) * step_pi_multiple > Rational(1, 2))
        throw std::domain_error("table: table extends past pi/2");

    SineTable table;
    table.step_pi_multiple = step_pi_multiple;
    table.precision = precision;
    table.seed = policy;
    table.first_index = cosine ? 0 : 1;

    // The recursion itself is exact; approximation enters only through the
    // quantized step angle, the quantized multiplier and the seed policy.
    const int working = precision + guard_digits;
    const Rational eps =
        quantize(step_pi_multiple * pi_rational(pi_digits_available), working);
    const Rational half_sine =
        series::eval_trig_exact(series::TrigKind::sine, eps / Rational(2), working + 5);
    table.difference_multiplier = quantize(Rational(4) * half_sine * half_sine, working);
    const Rational& mu = table.difference_multiplier;

    auto& values = table.exact_values;
    values.reserve(count);
    Rational delta;  // forward difference s_n - s_{n-1} for the latest n
    if (cosine) {
        // Seed pair from the exact identity cos(e) = 1 - 2 sin^2(e/2):
        // only the multiplier's quantization enters.
        values.push_back(Rational(1));
        delta = -mu / Rational(2);
        if (count >= 2) values.push_back(values.back() + delta);
    } else {
        switch (policy) {
            case SeedPolicy::epsilon:
                values.push_back(eps);
                break;
            case SeedPolicy::two_term:
                values.push_back(eps);
                if (count >= 2) values.push_back(Rational(2) * eps);
                break;
            case SeedPolicy::oracle:
                values.push_back(quantize(
                    series::eval_trig_exact(series::TrigKind::sine, eps, working + 2), working));
                break;
        }
        // delta entering the recursion: s_1 - s_0 with s_0 = 0, or the
        // seeded pair's difference when s_2 was seeded too.
        delta = values.size() == 2 ? values[1] - values[0] : values[0];
    }

    while (values.size() < count) {
        const Rational& current = values.back();
        delta -= mu * current;
        values.push_back(current + delta);
    }

    table.entries.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        SineTableEntry entry;
        entry.index = table.first_index + i;
        entry.angle_pi_multiple = Rational(Integer(entry.index)) * step_pi_multiple;
        entry.value = FixedDecimal::truncate_from(values[i], precision);
        table.entries.push_back(std::move(entry));
    }
    return table;
}

}  // namespace

SineTable generate_sine_table(const Rational& step_pi_multiple, unsigned count,
                              int precision, SeedPolicy seed) {
    return build_table(false, step_pi_multiple, count, precision, seed);
}

SineTable generate_cosine_table(const Rational& step_pi_multiple, unsigned count,
                                int precision) {
    return build_table(true, step_pi_multiple, count, precision, SeedPolicy::epsilon);
}

FixedDecimal sine_difference(const Rational& phi, const Rational& delta, int precision) {
    if (precision < 1) throw std::invalid_argument("sine difference: precision must be >= 1");
    const Rational sin_delta =
        series::eval_trig_exact(series::TrigKind::sine, delta, precision + 4);
    const Rational cos_phi =
        series::eval_trig_exact(series::TrigKind::cosine, phi, precision + 4);
    return FixedDecimal::truncate_from(Rational(2) * sin_delta * cos_phi, precision);
}

FixedDecimal central_first_derivative(const FixedDecimal& f_plus, const FixedDecimal& f_minus,
                                      const FixedDecimal& window, int precision) {
    if (window.sign() <= 0)
        throw std::domain_error("central difference: window must be positive");
    if (precision < 0) throw std::invalid_argument("central difference: negative precision");
    const Rational quotient =
        (f_plus.to_rational() - f_minus.to_rational()) / window.to_rational();
    return FixedDecimal::truncate_from(quotient, precision);
}

DifferenceSample central_difference_sample(const Rational& phi, const Rational& half_window,
                                           int precision) {
    if (half_window.sign() <= 0)
        throw std::domain_error("central difference: window must be positive");
    DifferenceSample sample;
    sample.phi = phi;
    sample.half_window = half_window;
    sample.f_plus = series::eval_trig(series::TrigKind::sine, phi + half_window, precision);
    sample.f_minus = series::eval_trig(series::TrigKind::sine, phi - half_window, precision);
    sample.f_center = series::eval_trig(series::TrigKind::sine, phi, precision);
    sample.estimate = central_first_derivative(
        sample.f_plus, sample.f_minus,
        FixedDecimal::truncate_from(Rational(2) * half_window, precision + 6), precision);
    return sample;
}

FixedDecimal second_difference_ratio(const SineTable& table, unsigned index) {
    if (index < table.first_index + 1)
        throw std::domain_error("second difference: boundary index");
    const std::size_t position = index - table.first_index;
    if (position + 1 >= table.exact_values.size())
        throw std::domain_error("second difference: boundary index");
    const Rational& center = table.exact_values[position];
    if (center.is_zero())
        throw std::domain_error("second difference: table value is zero at index");
    const Rational ratio = (table.exact_values[position + 1] - Rational(2) * center +
                            table.exact_values[position - 1]) /
                           center;
    return FixedDecimal::truncate_from(ratio, table.precision);
}

}  // namespace madhava::aryabhata
