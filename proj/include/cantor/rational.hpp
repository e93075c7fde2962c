#ifndef CANTORCF_RATIONAL_HPP
#define CANTORCF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cantor/errors.hpp"

namespace cantor {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. The only numeric carrier for continued-fraction
/// values, convergents and interval endpoints.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses "p/q" or a bare integer "p". Throws DomainError on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    Rational abs() const;
    /// Multiplicative inverse; throws DomainError on zero.
    Rational inverse() const;
    /// Largest integer <= value.
    Int floor() const;

    double to_double() const { return v_.get_d(); }

    /// "num/den" in lowest terms, denominator always spelled out ("0/1").
    std::string str() const;
    /// Decimal rendering with the given number of significant digits.
    std::string decimal(std::size_t significant_digits) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// 2^-j as an exact rational.
Rational pow2_inverse(std::size_t j);

/// Natural log of a positive integer, valid far beyond double range.
double log_approx(const Int& positive);
/// Natural log of a positive rational, valid for huge and tiny values.
double log_approx(const Rational& positive);

} // namespace cantor

#endif
