#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace madhava {

/// Arbitrary-precision signed integer (GMP-backed).
using Integer = mpz_class;

/**
 * Exact arbitrary-precision rational number.
 *
 * Invariants, maintained after every operation:
 *  - denominator > 0 (sign lives in the numerator)
 *  - gcd(|numerator|, denominator) == 1
 *  - zero is uniquely 0/1
 *
 * All arithmetic is exact; division by zero throws std::domain_error.
 * Values are immutable in spirit: every operation returns a fresh value and
 * instances can be shared freely across threads.
 */
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}            // NOLINT: implicit by design
    Rational(const Integer& n) : value_(n) {}  // NOLINT
    Rational(const Integer& num, const Integer& den) : value_(num, den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on
    /// malformed input, std::domain_error on a zero denominator.
    static Rational from_string(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Multiplicative inverse; throws on zero.
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    /// Exact integer power. Negative exponents invert (zero base throws).
    Rational pow(long exponent) const;

    /// Canonical "p/q" rendering, denominator always printed ("0/1", "5/1").
    std::string str() const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

/// 10^exponent as an Integer (exponent >= 0).
Integer pow10(unsigned long exponent);

/// n! as an exact Integer.
Integer factorial(unsigned long n);

}  // namespace madhava
