#pragma once

#include "hnpoly/int.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace hnpoly {

/// Reduced fraction with positive denominator. The slope d/h of a stable
/// bundle is represented this way; ordering is the usual rational order,
/// decided by cross multiplication.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rational(long n) : num_(n), den_(1) {}            // NOLINT
    Rational(Int n, Int d);
    Rational(long n, long d) : Rational(Int(n), Int(d)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    /// Largest integer <= value / smallest integer >= value.
    Int floor() const;
    Int ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    /// "d/h", or just "d" when the value is an integer.
    std::string str() const;

private:
    Int num_, den_;
};

/// Slopes are plain rationals; the alias marks intent at call sites.
using Slope = Rational;

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hnpoly
