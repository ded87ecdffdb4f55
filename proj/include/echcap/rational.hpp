#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ech {

/// Exact arbitrary-precision rational number, always kept in lowest terms
/// with a positive denominator. Thin value wrapper around GMP's mpq_class;
/// adds exact parsing of "p/q", integer and finite-decimal literals, and a
/// canonical string form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n);  // NOLINT: implicit by design
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& v);

    /// Accepts "p/q", "-12", or a finite decimal such as "2.99" (converted
    /// exactly). Never goes through floating point. Throws ParseError.
    static Rational parse(std::string_view text);

    /// Canonical form: "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Largest integer <= *this, as int64. Throws Error on overflow.
    std::int64_t floor_int64() const;
    /// Smallest integer >= *this, as int64.
    std::int64_t ceil_int64() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The unique rational with smallest denominator (ties broken by smallest
/// numerator magnitude) strictly inside the open interval (lo, hi).
/// Used by the threshold bisection to keep coefficients small.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace ech
