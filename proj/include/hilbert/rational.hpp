#pragma once
// Exact rational numbers over Int; canonical form has positive denominator
// and coprime numerator/denominator.

#include <compare>
#include <stdexcept>
#include <string>

#include "hilbert/int.hpp"

namespace hilbert {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }
    bool is_integer() const { return den_ == Int(1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational abs() const {
        Rational r = *this;
        r.num_ = r.num_.abs();
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    Int num_, den_;
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        Int g = gcd(num_, den_);
        if (g > Int(1)) { num_ /= g; den_ /= g; }
        if (num_.is_zero()) den_ = 1;
    }
};

}  // namespace hilbert
