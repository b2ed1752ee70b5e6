#pragma once

#include "solvgenus/integer.hpp"

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace solvgenus {

/**
 * Exact real number (p + q sqrt(D)) / r with D > 0 not a perfect square.
 * Rationals are the q = 0 case. Stored reduced: gcd(p, q, r) = 1, r > 0.
 *
 * Arithmetic between two values is only defined when they live in the same
 * field, i.e. share D or one of them is rational.
 */
class QuadraticIrrational {
public:
    QuadraticIrrational(Integer p, Integer q, Integer r, Integer disc)
        : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), disc_(std::move(disc)) {
        if (r_ == 0) throw std::invalid_argument("QuadraticIrrational: zero denominator");
        if (disc_ <= 0 || is_square(disc_)) throw std::invalid_argument("QuadraticIrrational: D must be a positive non-square");
        normalize();
    }

    static QuadraticIrrational rational(const Rational& x, const Integer& disc) {
        return {boost::multiprecision::numerator(x), 0, boost::multiprecision::denominator(x), disc};
    }

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& r() const { return r_; }
    const Integer& disc() const { return disc_; }

    bool is_rational() const { return q_ == 0; }
    Rational rational_part() const { return Rational(p_, r_); }

    int sign() const {
        int sp = p_.sign(), sq = q_.sign();
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        // p and q sqrt(D) have opposite signs: compare magnitudes.
        Integer lhs = p_ * p_, rhs = q_ * q_ * disc_;
        return lhs > rhs ? sp : sq;
    }

    Integer floor() const {
        if (q_ == 0) return floor_div(p_, r_);
        // q sqrt(D) is irrational, so it lies strictly between n and n + 1.
        Integer root = isqrt(q_ * q_ * disc_);
        Integer n = q_ > 0 ? root : Integer(-root - 1);
        return floor_div(p_ + n, r_);
    }

    long double to_long_double() const {
        return (p_.convert_to<long double>() + q_.convert_to<long double>() * std::sqrt(disc_.convert_to<long double>())) /
               r_.convert_to<long double>();
    }
    double to_double() const { return static_cast<double>(to_long_double()); }

    QuadraticIrrational conjugate() const { return {p_, -q_, r_, disc_}; }

    friend QuadraticIrrational operator+(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        check_same_field(x, y);
        return {x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_, x.r_ * y.r_, field_of(x, y)};
    }
    QuadraticIrrational operator-() const { return {-p_, -q_, r_, disc_}; }
    friend QuadraticIrrational operator-(const QuadraticIrrational& x, const QuadraticIrrational& y) { return x + (-y); }
    friend QuadraticIrrational operator*(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        check_same_field(x, y);
        return {x.p_ * y.p_ + x.q_ * y.q_ * x.disc_, x.p_ * y.q_ + x.q_ * y.p_, x.r_ * y.r_, field_of(x, y)};
    }
    friend QuadraticIrrational operator+(const QuadraticIrrational& x, const Rational& y) {
        return x + rational(y, x.disc_);
    }
    friend QuadraticIrrational operator-(const QuadraticIrrational& x, const Rational& y) {
        return x + rational(-y, x.disc_);
    }
    friend QuadraticIrrational operator*(const QuadraticIrrational& x, const Rational& y) {
        return x * rational(y, x.disc_);
    }

    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_ && (x.q_ == 0 || x.disc_ == y.disc_);
    }
    friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const QuadraticIrrational& x, const Rational& y) { return x.is_rational() && x.rational_part() == y; }
    friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const Rational& y) {
        return x <=> rational(y, x.disc_);
    }

    /// "(p + q*sqrt(D))/r", dropping parts that are zero or one.
    std::string str() const {
        std::string num;
        if (q_ == 0) {
            num = p_.str();
        } else {
            std::string radical = (abs(q_) == 1 ? std::string() : abs(q_).str() + "*") + "sqrt(" + disc_.str() + ")";
            if (p_ == 0)
                num = (q_ < 0 ? "-" : "") + radical;
            else
                num = p_.str() + (q_ < 0 ? " - " : " + ") + radical;
        }
        if (r_ == 1) return num;
        bool wrap = q_ != 0 && p_ != 0;
        return (wrap ? "(" + num + ")" : num) + "/" + r_.str();
    }

private:
    static void check_same_field(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        if (x.q_ != 0 && y.q_ != 0 && x.disc_ != y.disc_)
            throw std::invalid_argument("QuadraticIrrational: operands lie in different quadratic fields");
    }

    static const Integer& field_of(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x.q_ != 0 ? x.disc_ : y.disc_;
    }

    void normalize() {
        if (r_ < 0) {
            p_ = -p_;
            q_ = -q_;
            r_ = -r_;
        }
        Integer g = gcd(gcd(p_, q_), r_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
            r_ /= g;
        }
    }

    Integer p_, q_, r_, disc_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x) { return os << x.str(); }

}  // namespace solvgenus
