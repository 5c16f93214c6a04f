#include <random>

#include "doctest.h"

#include "madhava/polynomial.hpp"

using madhava::Integer;
using madhava::Rational;
using madhava::RationalPolynomial;

namespace {

std::mt19937_64 rng(0xBEEFCAFEULL);

RationalPolynomial random_polynomial() {
    std::uniform_int_distribution<int> pick_terms(1, 5);
    std::uniform_int_distribution<unsigned> pick_degree(0, 9);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    RationalPolynomial p;
    int terms = pick_terms(rng);
    for (int i = 0; i < terms; ++i) {
        unsigned d = pick_degree(rng);
        p.set_coefficient(d, p.coefficient(d) + Rational(num(rng), den(rng)));
    }
    return p;
}

Rational random_point() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("coefficient storage drops explicit zeros") {
    RationalPolynomial p;
    CHECK(p.is_zero());
    CHECK(p.degree() == 0);
    p.set_coefficient(4, Rational(3, 5));
    CHECK(p.degree() == 4);
    CHECK(p.coefficient(4) == Rational(3, 5));
    CHECK(p.coefficient(2).is_zero());
    p.set_coefficient(4, Rational(0));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
}

TEST_CASE("double integration maps x to x^3/6") {
    RationalPolynomial x = RationalPolynomial::monomial(1, Rational(1));
    RationalPolynomial integrated = x.double_integral();
    CHECK(integrated == RationalPolynomial::monomial(3, Rational(1, 6)));
}

TEST_CASE("double integration divides by the two new degrees") {
    for (unsigned k = 0; k <= 8; ++k) {
        Rational c(7, 3);
        RationalPolynomial mono = RationalPolynomial::monomial(k, c);
        RationalPolynomial expected = RationalPolynomial::monomial(
            k + 2, c / Rational(Integer((k + 1) * (k + 2))));
        CHECK(mono.double_integral() == expected);
    }
}

TEST_CASE("derivative undoes integration") {
    for (int i = 0; i < 50; ++i) {
        RationalPolynomial p = random_polynomial();
        CHECK(p.double_integral().derivative().derivative() == p);
    }
}

TEST_CASE("double integration is linear and vanishes to second order at zero") {
    for (int i = 0; i < 30; ++i) {
        RationalPolynomial p = random_polynomial(), q = random_polynomial();
        Rational a = random_point(), b = random_point();
        CHECK((a * p + b * q).double_integral() ==
              a * p.double_integral() + b * q.double_integral());
        RationalPolynomial integral = p.double_integral();
        CHECK(integral.evaluate(Rational(0)).is_zero());
        CHECK(integral.derivative().evaluate(Rational(0)).is_zero());
    }
}

TEST_CASE("evaluation agrees with summing terms directly") {
    for (int i = 0; i < 50; ++i) {
        RationalPolynomial p = random_polynomial();
        Rational x = random_point();
        Rational direct(0);
        for (const auto& [degree, coefficient] : p.terms())
            direct += coefficient * x.pow(static_cast<long>(degree));
        CHECK(p.evaluate(x) == direct);
    }
    CHECK(RationalPolynomial().evaluate(random_point()).is_zero());
}

TEST_CASE("evaluation at zero reads the constant term") {
    RationalPolynomial p;
    p.set_coefficient(0, Rational(5, 9));
    p.set_coefficient(3, Rational(-2, 7));
    CHECK(p.evaluate(Rational(0)) == Rational(5, 9));
}

TEST_CASE("addition and scalar multiplication behave algebraically") {
    for (int i = 0; i < 30; ++i) {
        RationalPolynomial p = random_polynomial(), q = random_polynomial();
        Rational x = random_point();
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
        CHECK((p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x));
        Rational a = random_point();
        CHECK((a * p).evaluate(x) == a * p.evaluate(x));
    }
}
