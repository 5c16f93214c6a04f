#include <random>
#include <stdexcept>

#include "doctest.h"

#include "madhava/constants.hpp"
#include "madhava/samkalitam.hpp"

using madhava::Integer;
using madhava::Rational;
namespace samkalitam = madhava::samkalitam;
using madhava::summation::Mode;

namespace {

Rational ulp(int precision) { return Rational(Integer(1), madhava::pow10(precision)); }

}  // namespace

TEST_CASE("power sums match worked examples") {
    CHECK(samkalitam::power_sum(5, 3).sum == 225);
    CHECK(samkalitam::power_sum(10, 1).sum == 55);
    CHECK(samkalitam::power_sum(10, 2).sum == 385);
    CHECK(samkalitam::power_sum(100, 0).sum == 100);
    CHECK(samkalitam::power_sum(1, 7).sum == 1);
    CHECK(samkalitam::power_sum(10, 2).normalized == Rational(77, 200));
    CHECK(samkalitam::power_sum(10, 2).limit == Rational(1, 3));
    CHECK_THROWS_AS(samkalitam::power_sum(0, 2), std::domain_error);
}

TEST_CASE("parallel power sums equal serial ones") {
    CHECK(samkalitam::power_sum(5000, 4, Mode::parallel).sum ==
          samkalitam::power_sum(5000, 4, Mode::serial).sum);
}

TEST_CASE("the recursive route agrees with direct summation") {
    for (unsigned long n = 1; n <= 30; ++n)
        for (unsigned k = 0; k <= 8; ++k)
            CHECK(samkalitam::power_sum_recursive(n, k).sum ==
                  samkalitam::power_sum(n, k).sum);
}

TEST_CASE("the recursion identity holds term by term") {
    // S_N(k) = N * S_N(k-1) - sum_{n=1}^{N-1} S_n(k-1), checked directly.
    for (unsigned long n : {2UL, 7UL, 19UL}) {
        for (unsigned k = 1; k <= 6; ++k) {
            Integer rhs = Integer(n) * samkalitam::power_sum(n, k - 1).sum;
            for (unsigned long j = 1; j < n; ++j) rhs -= samkalitam::power_sum(j, k - 1).sum;
            CHECK(samkalitam::power_sum(n, k).sum == rhs);
        }
    }
}

TEST_CASE("both sides of the re-summation identity balance") {
    for (unsigned long n = 1; n <= 40; ++n)
        for (unsigned k = 1; k <= 8; ++k) {
            auto sides = samkalitam::abel_identity_check(n, k);
            CHECK(sides.lhs == sides.rhs);
        }
    auto degenerate = samkalitam::abel_identity_check(1, 3);
    CHECK(degenerate.lhs == 0);
    CHECK(degenerate.rhs == 0);
    CHECK_THROWS_AS(samkalitam::abel_identity_check(5, 0), std::domain_error);
}

TEST_CASE("normalized deviation from the limit matches the worked example") {
    CHECK(samkalitam::j_limit_deviation(10, 2) == Rational(31, 600));
    CHECK(samkalitam::j_limit_deviation(7, 0) == Rational(0));
    CHECK(samkalitam::j_limit_deviation(123456, 0) == Rational(0));
}

TEST_CASE("deviation is positive and shrinks like 1/(2N)") {
    for (unsigned k = 1; k <= 10; ++k) {
        Rational previous;
        for (unsigned long n : {10UL, 100UL, 1000UL}) {
            Rational dev = samkalitam::j_limit_deviation(n, k);
            CHECK(dev.sign() > 0);
            CHECK(dev <= Rational(1, static_cast<long>(n)));
            if (n > 10) CHECK(dev < previous);
            previous = dev;
        }
    }
    // N * deviation approaches 1/2 with an O(k/N) correction.
    Rational scaled = Rational(1000) * samkalitam::j_limit_deviation(1000, 6);
    CHECK((scaled - Rational(1, 2)).abs() < Rational(1, 1000));
}

TEST_CASE("pi series partial sums bracket the limit and carry a certified bound") {
    auto four_terms = samkalitam::madhava_pi(4, 12);
    CHECK(four_terms.series.partial_sum == Rational(76, 105));
    CHECK(four_terms.series.terms_used == 4);
    CHECK(four_terms.series.error_bound == Rational(1, 9));

    Rational quarter_pi = madhava::pi_rational(madhava::pi_digits_available) / Rational(4);
    for (unsigned long m = 1; m <= 12; ++m) {
        auto result = samkalitam::madhava_pi(m, 12);
        Rational gap = (result.series.partial_sum - quarter_pi).abs();
        CHECK(gap < result.series.error_bound);
        if (m % 2 == 1)
            CHECK(result.series.partial_sum > quarter_pi);
        else
            CHECK(result.series.partial_sum < quarter_pi);
    }
    CHECK_THROWS_AS(samkalitam::madhava_pi(0, 12), std::domain_error);
}

TEST_CASE("pi estimate converges at the expected slow rate") {
    auto result = samkalitam::madhava_pi(1000, 12);
    Rational pi_ref = madhava::pi_rational(madhava::pi_digits_available);
    Rational gap = (result.pi_estimate.to_rational() - pi_ref).abs();
    CHECK(gap < Rational(1, 100));
    CHECK(gap > Rational(1, 10000));
    CHECK(result.pi_estimate.precision() == 12);
}

TEST_CASE("decimal accumulation tracks the exact series within its bound") {
    for (unsigned long m : {10UL, 500UL, 4096UL}) {
        auto exact = samkalitam::madhava_pi(m, 15);
        auto decimal = samkalitam::madhava_pi_decimal(m, 15);
        Rational gap =
            (decimal.pi_estimate.to_rational() - exact.pi_estimate.to_rational()).abs();
        CHECK(gap < ulp(13));
        Rational pi_ref = madhava::pi_rational(madhava::pi_digits_available);
        CHECK((decimal.pi_estimate.to_rational() - pi_ref).abs() < decimal.error_bound);
    }
}

TEST_CASE("parallel pi summation is identical to serial") {
    CHECK(samkalitam::madhava_pi(3000, 12, Mode::parallel).series.partial_sum ==
          samkalitam::madhava_pi(3000, 12, Mode::serial).series.partial_sum);
}

TEST_CASE("arctangent series matches its domain contract") {
    CHECK(samkalitam::arctan_series(Rational(0), 5).partial_sum == Rational(0));
    CHECK(samkalitam::arctan_series(Rational(1), 1).partial_sum == Rational(1));
    CHECK(samkalitam::arctan_series(Rational(1), 2).partial_sum == Rational(2, 3));
    CHECK_THROWS_AS(samkalitam::arctan_series(Rational(-1, 2), 3), std::domain_error);
    CHECK_THROWS_AS(samkalitam::arctan_series(Rational(3, 2), 3), std::domain_error);
    CHECK_THROWS_AS(samkalitam::arctan_series(Rational(1), 0), std::domain_error);
}

TEST_CASE("arctangent partial sums stay within the certified tail bound") {
    std::mt19937_64 rng(0xA7C7A);
    std::uniform_int_distribution<long> num(0, 64);
    std::uniform_int_distribution<unsigned long> terms(1, 40);
    for (int i = 0; i < 25; ++i) {
        Rational t(num(rng), 64);
        unsigned long m = terms(rng);
        auto result = samkalitam::arctan_series(t, m);
        Rational truth = samkalitam::arctan_oracle(t, 30);
        CHECK((result.partial_sum - truth).abs() <= result.error_bound + ulp(30));
    }
}

TEST_CASE("arctangent oracle reproduces the known right-angle values") {
    Rational quarter_pi = madhava::pi_rational(madhava::pi_digits_available) / Rational(4);
    CHECK((samkalitam::arctan_oracle(Rational(1), 30) - quarter_pi).abs() < ulp(30));
    CHECK(samkalitam::arctan_oracle(Rational(0), 30) == Rational(0));
    // arctan(1/2) + arctan(1/3) = pi/4 exactly.
    Rational combined = samkalitam::arctan_oracle(Rational(1, 2), 30) +
                        samkalitam::arctan_oracle(Rational(1, 3), 30);
    CHECK((combined - quarter_pi).abs() < ulp(29));
}

TEST_CASE("quadrant chord geometry matches the exact construction") {
    auto sample = samkalitam::quadrant_geometry(100, 1, 25);
    CHECK(sample.oa_sq_prev == Rational(1));
    CHECK(sample.oa_sq == Rational(1) + Rational(1, 10000));
    CHECK(sample.predicted_sin_delta == Rational(100, 10001));
    CHECK((sample.refined_prediction - sample.true_sin_delta).abs() < ulp(20));

    auto last = samkalitam::quadrant_geometry(100, 100, 25);
    CHECK(last.oa_sq == Rational(2));

    auto mid = samkalitam::quadrant_geometry(100, 37, 25);
    CHECK(mid.predicted_sin_delta == Rational(100, 10000 + 37 * 37));
    CHECK((mid.refined_prediction - mid.true_sin_delta).abs() < ulp(20));

    CHECK_THROWS_AS(samkalitam::quadrant_geometry(100, 0, 25), std::domain_error);
    CHECK_THROWS_AS(samkalitam::quadrant_geometry(100, 101, 25), std::domain_error);
    CHECK_THROWS_AS(samkalitam::quadrant_geometry(0, 1, 25), std::domain_error);
}

TEST_CASE("summed predictions approach an eighth of the full circle") {
    Rational quarter_pi = madhava::pi_rational(madhava::pi_digits_available) / Rational(4);
    Rational sum_100 = samkalitam::quadrant_predicted_sum(100);
    CHECK(sum_100 < quarter_pi);
    CHECK(quarter_pi - sum_100 < Rational(4, 1000));
    Rational sum_400 = samkalitam::quadrant_predicted_sum(400);
    CHECK(quarter_pi - sum_400 < quarter_pi - sum_100);
    CHECK(samkalitam::quadrant_predicted_sum(400, Mode::parallel) == sum_400);
}
