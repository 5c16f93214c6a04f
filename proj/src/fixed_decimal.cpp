#include "madhava/fixed_decimal.hpp"

#include <algorithm>

namespace madhava {

namespace {

// Truncated quotient a / b (rounds toward zero, like the scribe dropping
// whatever digits fall off the board).
Integer tdiv(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("fixed-decimal: division by zero");
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

FixedDecimal::FixedDecimal(Integer scaled, int precision)
    : scaled_(std::move(scaled)), precision_(precision) {
    if (precision < 0) throw std::invalid_argument("fixed-decimal: negative precision");
}

FixedDecimal FixedDecimal::truncate_from(const Rational& value, int precision) {
    if (precision < 0) throw std::invalid_argument("fixed-decimal: negative precision");
    Integer scaled = tdiv(value.numerator() * pow10(precision), value.denominator());
    return FixedDecimal(std::move(scaled), precision);
}

FixedDecimal FixedDecimal::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    auto point = rest.find('.');
    std::string_view whole = rest.substr(0, point);
    std::string_view frac = point == std::string_view::npos ? std::string_view{} : rest.substr(point + 1);
    auto all_digits = [](std::string_view s) {
        return s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac) ||
        (point != std::string_view::npos && frac.empty()))
        throw std::invalid_argument("fixed-decimal: malformed number \"" + std::string(text) + "\"");
    std::string digits = std::string(whole) + std::string(frac);
    Integer scaled;
    mpz_set_str(scaled.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10);
    if (negative) scaled = -scaled;
    return FixedDecimal(std::move(scaled), static_cast<int>(frac.size()));
}

Rational FixedDecimal::to_rational() const {
    return Rational(scaled_, pow10(precision_));
}

FixedDecimal FixedDecimal::rescaled(int new_precision) const {
    if (new_precision < 0) throw std::invalid_argument("fixed-decimal: negative precision");
    if (new_precision == precision_) return *this;
    if (new_precision > precision_)
        return FixedDecimal(scaled_ * pow10(new_precision - precision_), new_precision);
    return FixedDecimal(tdiv(scaled_, pow10(precision_ - new_precision)), new_precision);
}

FixedDecimal operator+(const FixedDecimal& a, const FixedDecimal& b) {
    int p = std::max(a.precision_, b.precision_);
    return FixedDecimal(a.rescaled(p).scaled_ + b.rescaled(p).scaled_, p);
}

FixedDecimal operator-(const FixedDecimal& a, const FixedDecimal& b) {
    return a + (-b);
}

FixedDecimal operator*(const FixedDecimal& a, const FixedDecimal& b) {
    // Exact product sits at precision a.p + b.p; truncate back to max(p).
    int p = std::max(a.precision_, b.precision_);
    Integer wide = a.scaled_ * b.scaled_;
    return FixedDecimal(tdiv(wide, pow10(std::min(a.precision_, b.precision_))), p);
}

FixedDecimal operator/(const FixedDecimal& a, const FixedDecimal& b) {
    if (b.is_zero()) throw std::domain_error("fixed-decimal: division by zero");
    int p = std::max(a.precision_, b.precision_);
    // a/b at precision p: (a.scaled * 10^(p - a.p + b.p)) / b.scaled, truncated.
    Integer num = a.scaled_ * pow10(static_cast<unsigned long>(p - a.precision_ + b.precision_));
    return FixedDecimal(tdiv(num, b.scaled_), p);
}

bool operator==(const FixedDecimal& a, const FixedDecimal& b) {
    int p = std::max(a.precision_, b.precision_);
    return a.rescaled(p).scaled_ == b.rescaled(p).scaled_;
}

std::strong_ordering operator<=>(const FixedDecimal& a, const FixedDecimal& b) {
    int p = std::max(a.precision_, b.precision_);
    Integer x = a.rescaled(p).scaled_, y = b.rescaled(p).scaled_;
    int c = mpz_cmp(x.get_mpz_t(), y.get_mpz_t());
    return c <=> 0;
}

namespace {

std::string render(const Integer& scaled, int precision) {
    Integer mag = ::abs(scaled);
    std::string digits = mag.get_str();
    if (static_cast<int>(digits.size()) <= precision)
        digits.insert(0, precision - digits.size() + 1, '0');
    std::string out;
    if (sgn(scaled) < 0) out += '-';
    out += digits.substr(0, digits.size() - precision);
    if (precision > 0) {
        out += '.';
        out += digits.substr(digits.size() - precision);
    }
    return out;
}

}  // namespace

std::string FixedDecimal::str() const { return render(scaled_, precision_); }

std::string FixedDecimal::str_rounded(int digits) const {
    if (digits < 0) throw std::invalid_argument("fixed-decimal: negative precision");
    if (digits >= precision_) return rescaled(digits).str();
    // Round half away from zero at the requested place.
    Integer scale = pow10(precision_ - digits);
    Integer doubled = 2 * scaled_ + (sgn(scaled_) < 0 ? -scale : scale);
    Integer rounded = tdiv(doubled, 2 * scale);
    return render(rounded, digits);
}

}  // namespace madhava
