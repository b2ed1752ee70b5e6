#pragma once

// Exact 2x2 integer matrices, primitive slopes on the torus and the
// monodromy quadratic form Q_L(v) = det(v, Lv).
//
// A slope (p, q) with gcd(p, q) = 1 parameterizes an essential simple closed
// curve on T^2; the geometric intersection number of two slopes is the
// absolute value of the determinant of the two vectors.

#include "solvgenus/error.hpp"
#include "solvgenus/integer.hpp"

#include <ostream>
#include <string>

namespace solvgenus {

/// Exact column vector in Z^2.
struct Vec2 {
    Integer x, y;

    friend bool operator==(const Vec2&, const Vec2&) = default;

    Vec2 operator-() const { return {-x, -y}; }
};

inline Integer det(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

/// Row-major [[a, b], [c, d]].
struct IntMatrix2 {
    Integer a, b, c, d;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    /// Matrix whose columns are u and v.
    static IntMatrix2 from_columns(const Vec2& u, const Vec2& v) { return {u.x, v.x, u.y, v.y}; }

    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    Integer det() const { return a * d - b * c; }
    Integer trace() const { return a + d; }

    bool is_unimodular() const {
        Integer dt = det();
        return dt == 1 || dt == -1;
    }
    bool in_sl2() const { return det() == 1; }

    IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }

    IntMatrix2 operator*(const IntMatrix2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Vec2 column(int j) const { return j == 0 ? Vec2{a, c} : Vec2{b, d}; }

    /// Exact inverse of a unimodular matrix: det * adj.
    IntMatrix2 inverse() const {
        Integer dt = det();
        if (dt == 1) return {d, -b, -c, a};
        if (dt == -1) return {-d, b, c, -a};
        throw Error(ErrorKind::NotUnimodular, "inverse requires |det| = 1, got det " + dt.str());
    }

    /// Entrywise gcd; zero only for the zero matrix.
    Integer content() const { return gcd(gcd(a, b), gcd(c, d)); }
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
    return os << m.a << "," << m.b << ";" << m.c << "," << m.d;
}

inline void require_unimodular(const IntMatrix2& m) {
    if (!m.is_unimodular())
        throw Error(ErrorKind::NotUnimodular, "matrix has det " + m.det().str() + ", expected +1 or -1");
}

inline void require_sl2(const IntMatrix2& m) {
    if (!m.in_sl2()) throw Error(ErrorKind::NotSL2, "matrix has det " + m.det().str() + ", expected +1");
}

/// Elementary matrices generating the positive monoid of SL(2, Z).
inline IntMatrix2 r_power(const Integer& k) { return {1, k, 0, 1}; }
inline IntMatrix2 s_power(const Integer& k) { return {1, 0, k, 1}; }

/// Orientation-reversing reflection diag(1, -1).
inline IntMatrix2 reflection() { return {1, 0, 0, -1}; }

/**
 * A primitive integer vector up to sign. The stored representative has q > 0,
 * or q = 0 and p = 1, so equality is structural.
 */
class PrimitiveSlope {
public:
    PrimitiveSlope(const Integer& p, const Integer& q) : p_(p), q_(q) {
        if (gcd(p_, q_) != 1)
            throw Error(ErrorKind::NotPrimitive, "(" + p_.str() + "," + q_.str() + ") is not primitive");
        if (q_ < 0 || (q_ == 0 && p_ < 0)) {
            p_ = -p_;
            q_ = -q_;
        }
    }

    explicit PrimitiveSlope(const Vec2& v) : PrimitiveSlope(v.x, v.y) {}

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    Vec2 vector() const { return {p_, q_}; }

    friend bool operator==(const PrimitiveSlope&, const PrimitiveSlope&) = default;
    friend bool operator<(const PrimitiveSlope& l, const PrimitiveSlope& r) {
        return l.p_ != r.p_ ? l.p_ < r.p_ : l.q_ < r.q_;
    }

private:
    Integer p_, q_;
};

inline std::ostream& operator<<(std::ostream& os, const PrimitiveSlope& s) {
    return os << s.p() << "/" << s.q();
}

inline Integer intersection_number(const PrimitiveSlope& c, const PrimitiveSlope& c2) {
    return abs(det(c.vector(), c2.vector()));
}

inline PrimitiveSlope apply(const IntMatrix2& m, const PrimitiveSlope& c) {
    require_unimodular(m);
    return PrimitiveSlope(m * c.vector());
}

/// qa x^2 + qb xy + qc y^2.
struct MonodromyForm {
    Integer qa, qb, qc;

    friend bool operator==(const MonodromyForm&, const MonodromyForm&) = default;

    Integer disc() const { return qb * qb - 4 * qa * qc; }
    Integer operator()(const Integer& x, const Integer& y) const { return qa * x * x + qb * x * y + qc * y * y; }
    Integer operator()(const Vec2& v) const { return (*this)(v.x, v.y); }
};

/// Q_L(v) = det(v, Lv) = c x^2 + (d - a) xy - b y^2.
inline MonodromyForm monodromy_form(const IntMatrix2& m) {
    require_sl2(m);
    return {m.c, m.d - m.a, -m.b};
}

inline bool is_anosov(const IntMatrix2& m) {
    require_sl2(m);
    return abs(m.trace()) > 2;
}

inline void require_anosov(const IntMatrix2& m) {
    if (!is_anosov(m))
        throw Error(ErrorKind::NotAnosov, "trace " + m.trace().str() + " has absolute value <= 2");
}

/// trace(L^n) for det L = 1 and trace L = t, by t_{n+1} = t t_n - t_{n-1}.
inline Integer power_trace(const Integer& t, unsigned long n) {
    Integer prev = 2, cur = t;
    if (n == 0) return prev;
    for (unsigned long i = 1; i < n; ++i) {
        Integer next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline IntMatrix2 mat_pow(const IntMatrix2& m, long n) {
    IntMatrix2 base = n < 0 ? m.inverse() : m;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    IntMatrix2 result = IntMatrix2::identity();
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// KLK^{-1} for unimodular K.
inline IntMatrix2 conjugate_by(const IntMatrix2& k, const IntMatrix2& l) { return k * l * k.inverse(); }

}  // namespace solvgenus
