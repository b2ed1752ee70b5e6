#pragma once

// Matrices commuting with a standard-form monodromy L = [[m, -1], [1, 0]],
// |m| >= 3, and reversibility (conjugacy of L with L^{-1}).
//
// In SL(2, Z) the centralizer of L is {+-L^n}. In GL(2, Z) there is one more
// coset exactly when |m| = 3, represented by the fixed matrices below.

#include "solvgenus/conjugacy.hpp"
#include "solvgenus/core_algebra.hpp"

#include <optional>
#include <string>
#include <utility>

namespace solvgenus {

inline bool commutes(const IntMatrix2& k, const IntMatrix2& l) { return k * l == l * k; }

inline bool is_standard_form(const IntMatrix2& l) {
    return l.b == -1 && l.c == 1 && l.d == 0 && abs(l.a) >= 3;
}

inline void require_standard_form(const IntMatrix2& l) {
    if (!is_standard_form(l))
        throw Error(ErrorKind::NotStandardForm, "expected [[m,-1],[1,0]] with |m| >= 3");
}

inline IntMatrix2 standard_form_matrix(const Integer& m) { return {m, -1, 1, 0}; }

struct SignedPower {
    int sign;
    long exponent;
};

/// (sign, n) with k = sign * l^n, for k in SL(2, Z) commuting with a standard form l.
inline SignedPower express_power(const IntMatrix2& k, const IntMatrix2& l) {
    require_standard_form(l);
    if (!commutes(k, l)) throw Error(ErrorKind::NotCommuting, "K does not commute with L");
    Integer dt = k.det();
    if (dt == -1) throw Error(ErrorKind::NotExpressible, "det K = -1; K lies in the orientation-reversing coset");
    if (dt != 1) throw Error(ErrorKind::NotUnimodular, "det K = " + dt.str());
    if (k == IntMatrix2::identity()) return {1, 0};
    if (k == -IntMatrix2::identity()) return {-1, 0};

    // |trace(L^n)| = t_n(|m|) is strictly increasing in n.
    const Integer target = abs(k.trace());
    const Integer m = abs(l.a);
    Integer prev = 2, cur = m;
    long n = 1;
    while (cur < target) {
        Integer next = m * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
        ++n;
    }
    if (cur != target) throw Error(ErrorKind::NotExpressible, "trace of K is not a power trace of L");
    IntMatrix2 pos = mat_pow(l, n);
    IntMatrix2 neg = mat_pow(l, -n);
    if (k == pos) return {1, n};
    if (k == -pos) return {-1, n};
    if (k == neg) return {1, -n};
    if (k == -neg) return {-1, -n};
    throw Error(ErrorKind::NotExpressible, "K is not of the form +-L^n");
}

struct ReversibilityResult {
    bool reversible = false;
    /// K in SL(2, Z) with K L K^{-1} = L^{-1}.
    std::optional<IntMatrix2> witness;
};

inline ReversibilityResult is_reversible(const IntMatrix2& l) {
    require_anosov(l);
    ConjugacyResult r = are_conjugate(l, l.inverse(), Group::SL);
    return {r.conjugate, r.witness};
}

struct CentralizerDescription {
    IntMatrix2 base;
    std::string sl_part = "{+-L^n : n in Z}";
    /// det -1 coset representative, present iff |m| = 3.
    std::optional<IntMatrix2> gl_extra;
    /// Which of L, -L, L^-1, -L^-1 equals gl_extra^2 (empty when gl_extra is absent).
    std::string gl_extra_square;
    ReversibilityResult reversibility;
};

inline CentralizerDescription centralizer_description(const IntMatrix2& l) {
    require_standard_form(l);
    CentralizerDescription out{l};
    if (l.a == 3) out.gl_extra = IntMatrix2{-2, 1, -1, 1};
    if (l.a == -3) out.gl_extra = IntMatrix2{2, 1, -1, -1};
    if (out.gl_extra) {
        const IntMatrix2 sq = *out.gl_extra * *out.gl_extra;
        const IntMatrix2 inv = l.inverse();
        if (sq == l)
            out.gl_extra_square = "L";
        else if (sq == -l)
            out.gl_extra_square = "-L";
        else if (sq == inv)
            out.gl_extra_square = "L^-1";
        else if (sq == -inv)
            out.gl_extra_square = "-L^-1";
        else
            throw Error(ErrorKind::VerificationFailed, "square of the coset representative is not +-L^{+-1}");
        if (!commutes(*out.gl_extra, l) || out.gl_extra->det() != -1)
            throw Error(ErrorKind::VerificationFailed, "coset representative does not commute with L");
    }
    out.reversibility = is_reversible(l);
    return out;
}

}  // namespace solvgenus
