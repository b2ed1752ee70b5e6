#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace solvgenus {

/// Unbounded signed integer. Entries of L^n grow like lambda^n, so no
/// fixed-width type is used anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer& x) { return x.sign(); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& x, const Integer& y) {
    return boost::multiprecision::gcd(abs(x), abs(y));
}

/// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& x) { return boost::multiprecision::sqrt(x); }

inline bool is_square(const Integer& x) {
    if (x < 0) return false;
    Integer s = isqrt(x);
    return s * s == x;
}

/// Quotient rounded toward negative infinity; divisor must be nonzero.
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    Integer r = num - q * den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& num, const Integer& den) {
    return -floor_div(-num, den);
}

/// num/den for any nonzero den; Boost 1.74 rejects negative denominators.
inline Rational make_rational(const Integer& num, const Integer& den) {
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    Integer n = boost::multiprecision::numerator(x);
    Integer d = boost::multiprecision::denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline bool fits_int64(const Integer& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace solvgenus
