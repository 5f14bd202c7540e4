#pragma once

#include <string>

#include "cayley/int128.hpp"

namespace cayley {

/// Exact rational over Int128, always reduced, denominator always positive.
class Rational {
public:
    Rational() = default;
    Rational(Int128 numerator) : num_(numerator) {}  // NOLINT(google-explicit-constructor)
    Rational(int numerator) : num_(numerator) {}     // NOLINT(google-explicit-constructor)
    Rational(Int128 numerator, Int128 denominator) : num_(numerator), den_(denominator) {
        normalize();
    }

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int128 g = gcd(a.den_, b.den_);
        Int128 bs = b.den_ / g;
        return Rational(a.num_ * bs + b.num_ * (a.den_ / g), a.den_ * bs);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int128 g1 = gcd(a.num_, b.den_);
        Int128 g2 = gcd(b.num_, a.den_);
        Int128 n1 = g1.is_zero() ? a.num_ : a.num_ / g1;
        Int128 d2 = g1.is_zero() ? b.den_ : b.den_ / g1;
        Int128 n2 = g2.is_zero() ? b.num_ : b.num_ / g2;
        Int128 d1 = g2.is_zero() ? a.den_ : a.den_ / g2;
        return Rational(n1 * n2, d1 * d2);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::invalid_argument("Rational division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_.raw()) /
                                   static_cast<long double>(den_.raw()));
    }
    std::string str() const {
        if (den_ == Int128(1)) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("Rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int128 g = gcd(num_, den_);
        if (g > Int128(1)) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int128 num_ = 0;
    Int128 den_ = 1;
};

}  // namespace cayley
