#include "madhava/polynomial.hpp"

namespace madhava {

RationalPolynomial RationalPolynomial::monomial(unsigned degree, const Rational& coefficient) {
    RationalPolynomial p;
    p.set_coefficient(degree, coefficient);
    return p;
}

Rational RationalPolynomial::coefficient(unsigned degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational() : it->second;
}

void RationalPolynomial::set_coefficient(unsigned degree, const Rational& value) {
    if (value.is_zero())
        terms_.erase(degree);
    else
        terms_[degree] = value;
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    // Sparse Horner, highest degree first: between stored terms the
    // accumulator is raised by the degree gap in one pow.
    if (terms_.empty()) return Rational();
    auto it = terms_.rbegin();
    Rational acc = it->second;
    unsigned current_degree = it->first;
    for (++it; it != terms_.rend(); ++it) {
        acc = acc * x.pow(current_degree - it->first) + it->second;
        current_degree = it->first;
    }
    return acc * x.pow(current_degree);
}

RationalPolynomial RationalPolynomial::double_integral() const {
    RationalPolynomial out;
    for (const auto& [k, c] : terms_)
        out.set_coefficient(k + 2, c / Rational(Integer(k + 1)) / Rational(Integer(k + 2)));
    return out;
}

RationalPolynomial RationalPolynomial::derivative() const {
    RationalPolynomial out;
    for (const auto& [k, c] : terms_)
        if (k > 0) out.set_coefficient(k - 1, c * Rational(Integer(k)));
    return out;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial out = a;
    for (const auto& [k, c] : b.terms_) out.set_coefficient(k, out.coefficient(k) + c);
    return out;
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial out = a;
    for (const auto& [k, c] : b.terms_) out.set_coefficient(k, out.coefficient(k) - c);
    return out;
}

RationalPolynomial operator*(const Rational& scalar, const RationalPolynomial& p) {
    RationalPolynomial out;
    for (const auto& [k, c] : p.terms_) out.set_coefficient(k, scalar * c);
    return out;
}

std::string RationalPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        Rational mag = c.abs();
        bool unit = mag == Rational(1) && k > 0;
        if (!unit) out += mag.is_integer() ? mag.numerator().get_str() : mag.str();
        if (k > 0) {
            if (!unit) out += " ";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace madhava
