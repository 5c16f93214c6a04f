#pragma once

#include <map>
#include <string>

#include "madhava/rational.hpp"

namespace madhava {

/**
 * Sparse univariate polynomial with exact rational coefficients, indexed by
 * degree.  Zero coefficients are never stored, so two polynomials are equal
 * iff their term maps are equal.
 */
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    static RationalPolynomial monomial(unsigned degree, const Rational& coefficient);

    /// Coefficient of x^degree (zero if absent).
    Rational coefficient(unsigned degree) const;

    /// Sets (or erases, when zero) the coefficient of x^degree.
    void set_coefficient(unsigned degree, const Rational& value);

    bool is_zero() const { return terms_.empty(); }

    /// Degree of the highest stored term; the zero polynomial reports 0.
    unsigned degree() const { return terms_.empty() ? 0u : terms_.rbegin()->first; }

    const std::map<unsigned, Rational>& terms() const { return terms_; }

    /// Exact evaluation at x (sparse Horner scheme).
    Rational evaluate(const Rational& x) const;

    /// Term-by-term double integral: c*x^k -> c*x^(k+2) / ((k+1)(k+2)),
    /// both constants of integration zero.
    RationalPolynomial double_integral() const;

    /// Term-by-term derivative: c*x^k -> c*k*x^(k-1).
    RationalPolynomial derivative() const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& scalar, const RationalPolynomial& p);

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Human-oriented rendering like "x - 1/6 x^3", highest degree last.
    std::string str() const;

private:
    std::map<unsigned, Rational> terms_;
};

}  // namespace madhava
