#include "madhava/constants.hpp"

#include <stdexcept>

namespace madhava {

FixedDecimal pi_fixed(int digits) {
    if (digits < 0 || digits > pi_digits_available)
        throw std::invalid_argument("pi constant: 0..50 fractional digits available");
    // pi_digits_text is already a truncation, so dropping trailing digits
    // keeps it one: truncation of a truncation toward zero composes.
    return FixedDecimal::parse(pi_digits_text.substr(0, digits == 0 ? 1 : 2 + digits));
}

Rational pi_rational(int digits) { return pi_fixed(digits).to_rational(); }

Rational pi_upper_bound() {
    return pi_rational(pi_digits_available) + Rational(1, pow10(pi_digits_available));
}

}  // namespace madhava
