// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line.  Tolerances are pinned here on purpose;
// loosening one is a contract change, not a test fix.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "madhava/aryabhata.hpp"
#include "madhava/constants.hpp"
#include "madhava/samkalitam.hpp"
#include "madhava/samskaram.hpp"
#include "madhava/series.hpp"

using madhava::FixedDecimal;
using madhava::Integer;
using madhava::Rational;
namespace aryabhata = madhava::aryabhata;
namespace samkalitam = madhava::samkalitam;
namespace samskaram = madhava::samskaram;
using madhava::series::TrigKind;

namespace {

Rational pi50() { return madhava::pi_rational(madhava::pi_digits_available); }

Rational ulp(int digits) { return Rational(Integer(1), madhava::pow10(digits)); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string approx(const Rational& r) { return madhava::to_fixed(r, 10).str(); }

bool criterion_pi_series(std::string& detail) {
    bool ok = true;
    double exact_elapsed = 0, decimal_elapsed = 0;
    Rational final_gap;
    for (unsigned long m : {10UL, 1000UL, 100000UL}) {
        const Rational bound(Integer(4), Integer(2) * m + 1);

        auto t0 = std::chrono::steady_clock::now();
        auto exact = samkalitam::madhava_pi(m, 12);
        double elapsed = seconds_since(t0);
        Rational gap = (Rational(4) * exact.series.partial_sum - pi50()).abs();
        ok = ok && gap <= bound;
        if (m == 100000) {
            exact_elapsed = elapsed;
            final_gap = gap;
        }

        t0 = std::chrono::steady_clock::now();
        auto decimal = samkalitam::madhava_pi_decimal(m, 30);
        if (m == 100000) decimal_elapsed = seconds_since(t0);
        Rational decimal_gap = (decimal.pi_estimate.to_rational() - pi50()).abs();
        ok = ok && decimal_gap <= bound;
    }
    ok = ok && exact_elapsed < 5.0 && decimal_elapsed < 0.1;
    char buffer[160];
    std::snprintf(buffer, sizeof buffer,
                  "M=1e5 gap %s <= 2e-5; exact %.3fs (<5s), 30-digit decimal %.3fs (<0.1s)",
                  approx(final_gap).c_str(), exact_elapsed, decimal_elapsed);
    detail = buffer;
    return ok;
}

bool criterion_proximate_pi(std::string& detail) {
    const Rational gap = (Rational(62832, 20000) - pi50()).abs();
    detail = "|62832/20000 - pi| = " + approx(gap) + ", inside (1e-6, 1e-5)";
    return gap < ulp(5) && gap > ulp(6);
}

bool criterion_power_sum_identities(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (unsigned long n = 1; n <= 50; ++n) {
        for (unsigned k = 0; k <= 8; ++k)
            ok = ok && samkalitam::power_sum_recursive(n, k).sum ==
                           samkalitam::power_sum(n, k).sum;
        for (unsigned k = 1; k <= 8; ++k) {
            auto sides = samkalitam::abel_identity_check(n, k);
            ok = ok && sides.lhs == sides.rhs;
        }
    }
    auto spot = samkalitam::abel_identity_check(5, 3);
    ok = ok && spot.lhs == 50 && spot.rhs == 50;
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 2.0;
    char buffer[120];
    std::snprintf(buffer, sizeof buffer,
                  "850 exact identities incl. N=5,k=3 both sides 50; %.3fs (<2s)", elapsed);
    detail = buffer;
    return ok;
}

bool criterion_limit_deviation(std::string& detail) {
    // k = 0 is excluded: the deviation is identically zero there by the
    // operation's own contract, so the open interval applies to k >= 1.
    const unsigned long n = 10000;
    bool ok = true;
    Rational worst_centering;
    for (unsigned k = 1; k <= 20; ++k) {
        Rational dev = samkalitam::j_limit_deviation(n, k);
        ok = ok && dev.sign() > 0 && dev <= Rational(1L, static_cast<long>(n));
        Rational centering = (Rational(Integer(n)) * dev - Rational(1, 2)).abs();
        if (centering > worst_centering) worst_centering = centering;
        ok = ok && centering < ulp(3);
    }
    detail = "k=1..20 at N=1e4: deviation in (0,1/N], worst |N*dev - 1/2| = " +
             approx(worst_centering);
    return ok;
}

bool criterion_expansion_coefficients(std::string& detail) {
    auto sine = madhava::series::expansion(TrigKind::sine, 10);
    auto cosine = madhava::series::expansion(TrigKind::cosine, 10);
    bool ok = true;
    Integer factorial(1);
    unsigned long next = 1;  // factorial == (next-1)! at loop top
    for (unsigned j = 0; j <= 9; ++j) {
        while (next <= 2 * j + 1) factorial *= next++;
        Rational expected(Integer(j % 2 == 0 ? 1 : -1), factorial);
        ok = ok && sine.polynomial.coefficient(2 * j + 1) == expected;
    }
    ok = ok && sine.polynomial.derivative() == cosine.polynomial;
    detail = "sine coefficients are (-1)^j/(2j+1)! for j<=9; d/dtheta maps sine to cosine";
    return ok;
}

bool criterion_central_difference(std::string& detail) {
    FixedDecimal estimate = aryabhata::central_first_derivative(
        FixedDecimal::parse("0.6"), FixedDecimal::parse("0.5"), FixedDecimal::parse("0.122"),
        12);
    bool ok = estimate.str_rounded(2) == "0.82";
    // 33.5 degrees = (67/360) pi; the quoted 0.83 is good to half a unit.
    Rational cos_oracle = madhava::series::eval_trig_exact(
        TrigKind::cosine, Rational(67, 360) * pi50(), 20);
    ok = ok && (cos_oracle - Rational(83, 100)).abs() < Rational(5, 1000);
    detail = "(0.6-0.5)/0.122 = " + estimate.str() + ", printed 0.82 at two digits; cos(33.5deg) = " +
             approx(cos_oracle) + " within 0.005 of 0.83";
    return ok;
}

bool criterion_interpolation_discrepancy(std::string& detail) {
    auto terms = samskaram::cosine_interpolation_coefficients(3);
    bool ok = terms[3].sin_coefficient == Rational(1, 8);
    ok = ok && terms[3].sin_coefficient - Rational(1, 6) == Rational(-1, 24);
    detail = "order-3 sin(theta) coefficient is exactly 1/8; deviation from 1/6 is exactly -1/24";
    return ok;
}

bool criterion_sine_table_fidelity(std::string& detail) {
    // Frozen regression bound: the maximum absolute error of the default
    // (small-angle seeded) pi/80 table against the series oracle, measured
    // once from the oracle run and pinned here.
    // Measured once: 2.57067197302759e-4, at the final entry (angle 1/2).
    const Rational frozen_bound = Rational(257067198, 1000000000000LL);
    auto table = aryabhata::generate_sine_table(Rational(1, 80), 40, 12);
    auto reseeded =
        aryabhata::generate_sine_table(Rational(1, 80), 40, 12, aryabhata::SeedPolicy::oracle);
    Rational max_error, reseeded_max;
    for (unsigned i = 0; i < 40; ++i) {
        Rational truth = madhava::series::eval_trig_exact(
            TrigKind::sine, table.entries[i].angle_pi_multiple * pi50(), 20);
        Rational err = (table.exact_values[i] - truth).abs();
        if (err > max_error) max_error = err;
        Rational reseed_err = (reseeded.exact_values[i] - truth).abs();
        if (reseed_err > reseeded_max) reseeded_max = reseed_err;
    }
    bool ok = max_error <= frozen_bound && frozen_bound <= Rational(5, 1000) &&
              reseeded_max < ulp(9);
    detail = "default-seed max error " + approx(max_error) +
             " <= frozen 2.57067198e-4 (<= 5e-3); oracle reseed max " + approx(reseeded_max) +
             " < 1e-9";
    return ok;
}

bool criterion_quadrant_geometry(std::string& detail) {
    const unsigned long segments = 10000;
    auto t0 = std::chrono::steady_clock::now();
    Rational sum = samkalitam::quadrant_predicted_sum(segments);
    Rational quarter = pi50() / Rational(4);
    bool ok = sum < quarter && quarter - sum <= ulp(4);

    Rational worst;
    for (unsigned long n = 1; n <= segments && ok; ++n) {
        auto sample = samkalitam::quadrant_geometry(segments, n, 15);
        Rational gap = (sample.refined_prediction - sample.true_sin_delta).abs();
        if (gap > worst) worst = gap;
        ok = gap <= ulp(11);
    }
    char buffer[200];
    std::snprintf(buffer, sizeof buffer,
                  "sum within %s of pi/4 (<=1e-4); worst refined-vs-oracle gap %s (<=1e-11); %.1fs",
                  approx(quarter - sum).c_str(), approx(worst).c_str(), seconds_since(t0));
    detail = buffer;
    return ok;
}

bool criterion_square_roots(std::string& detail) {
    auto comparison = samskaram::compare_sqrt_methods(Rational(95), Rational(9), 2, 30);
    const Rational root = samskaram::sqrt_oracle(Rational(95), 30);
    bool ok = comparison.bakshali.iterates[0] == Rational(88, 9) &&
              comparison.heron.iterates[0] == Rational(88, 9);
    ok = ok && (comparison.bakshali.iterates[1] - root).abs() < Rational(5, 100000);
    ok = ok && (comparison.heron.iterates[1] - root).abs() < Rational(5, 100000);
    const char* verdict = comparison.closer == 0
                              ? "methods tie exactly (identical trajectories)"
                              : (comparison.closer < 0 ? "two-correction method is closer"
                                                       : "averaging method is closer");
    detail = std::string("iterate 1 = 88/9 for both; iterate 2 within 5e-5 of sqrt(95); ") +
             verdict;
    return ok;
}

struct Criterion {
    int number;
    const char* summary;
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "pi series partial sums stay inside the first-omitted-term bound",
         criterion_pi_series},
        {2, "62832/20000 is proximate: past 1e-6 but inside 1e-5", criterion_proximate_pi},
        {3, "power-sum recursion and re-summation identity hold exactly",
         criterion_power_sum_identities},
        {4, "normalized power sums exceed their limit by about 1/(2N)",
         criterion_limit_deviation},
        {5, "series expansions carry exact reciprocal-factorial coefficients",
         criterion_expansion_coefficients},
        {6, "central-difference slope prints 0.82 and matches the cosine",
         criterion_central_difference},
        {7, "stepped interpolation misses the cubic term by exactly -1/24",
         criterion_interpolation_discrepancy},
        {8, "pi/80 sine table stays inside the frozen error envelope",
         criterion_sine_table_fidelity},
        {9, "quadrant chord predictions sum to pi/4 and match the sine oracle",
         criterion_quadrant_geometry},
        {10, "square-root refinements from seed 9 reach sqrt(95) as reported",
         criterion_square_roots},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %2d: %s  %s\n              %s\n", criterion.number,
                    ok ? "PASS" : "FAIL", criterion.summary, detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
