#include "madhava/rational.hpp"

namespace madhava {

Rational Rational::from_string(std::string_view text) {
    auto parse_int = [](std::string_view part) {
        // mpz_set_str tolerates embedded whitespace; reject it up front so
        // "1 2/3" is a usage error, not twelve thirds.
        std::string_view digits = part;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
            digits.remove_prefix(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("rational: malformed integer \"" + std::string(part) + "\"");
        Integer n;
        mpz_set_str(n.get_mpz_t(), std::string(part).c_str(), 10);
        return n;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Rational(num, den);
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    const Rational base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1
                                   : static_cast<unsigned long>(exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    // base is canonical, so num/den already is: no gcd can appear under powers.
    Rational out;
    out.value_ = mpq_class(num, den);
    return out;
}

std::string Rational::str() const {
    return numerator().get_str() + "/" + denominator().get_str();
}

Integer pow10(unsigned long exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace madhava
