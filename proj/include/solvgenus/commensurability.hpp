#pragma once

// Virtual conjugacy of Anosov torus maps. Two monodromies with equal trace
// are intertwined by an integer matrix P (PA = BP, det P != 0); P(Z^2) is a
// finite-index lattice realizing a common finite cover. Unequal traces admit
// no intertwiner at all.

#include "solvgenus/conjugacy.hpp"
#include "solvgenus/core_algebra.hpp"

#include <array>
#include <optional>
#include <vector>

namespace solvgenus {

struct Intertwiner {
    IntMatrix2 p;
    /// |det P| = [Z^2 : P(Z^2)].
    Integer index;
};

using IntegerVector = std::vector<Integer>;

inline IntegerVector make_primitive(IntegerVector v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Integer basis of the rational kernel of rows (each row has `cols` entries),
/// by fraction-free Gauss-Jordan elimination. Basis vectors are primitive.
inline std::vector<IntegerVector> integer_kernel(std::vector<IntegerVector> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Integer f = rows[i][col], g = rows[rank][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = g * rows[i][j] - f * rows[rank][j];
            rows[i] = make_primitive(std::move(rows[i]));
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<IntegerVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        // Scale so every pivot variable comes out integral.
        Integer scale = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            Integer pv = abs(rows[r][pivot_cols[r]]);
            scale = scale / gcd(scale, pv) * pv;
        }
        IntegerVector v(cols, 0);
        v[free] = scale;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = -rows[r][free] * scale / rows[r][pivot_cols[r]];
        basis.push_back(make_primitive(std::move(v)));
    }
    return basis;
}

namespace detail {

inline IntMatrix2 primitive_matrix(const IntMatrix2& m) {
    Integer g = m.content();
    if (g <= 1) return m;
    return {m.a / g, m.b / g, m.c / g, m.d / g};
}

/// Fixes the overall sign so the first nonzero entry is positive.
inline IntMatrix2 sign_normalized(const IntMatrix2& m) {
    for (const Integer* e : {&m.a, &m.b, &m.c, &m.d})
        if (*e != 0) return *e < 0 ? -m : m;
    return m;
}

}  // namespace detail

/// P with PA = BP, det P != 0 and primitive entries, or nothing when the
/// traces differ. SL- and GL-conjugate pairs get their index-1 conjugator;
/// otherwise the smallest |det P| over kernel combinations with coefficients
/// in [-10, 10] is returned (a bounded search, not a proven minimum).
inline std::optional<Intertwiner> intertwiner(const IntMatrix2& a, const IntMatrix2& b) {
    require_anosov(a);
    require_anosov(b);
    if (a.trace() != b.trace()) return std::nullopt;
    for (Group g : {Group::SL, Group::GL}) {
        ConjugacyResult c = are_conjugate(a, b, g);
        if (c.conjugate) return Intertwiner{*c.witness, 1};
    }

    // Unknowns P = [[p0, p1], [p2, p3]]; PA - BP = 0 is four linear equations.
    std::vector<IntegerVector> rows = {
        {a.a - b.a, a.c, -b.b, 0},
        {a.b, a.d - b.a, 0, -b.b},
        {-b.c, 0, a.a - b.d, a.c},
        {0, -b.c, a.b, a.d - b.d},
    };
    std::vector<IntegerVector> kernel = integer_kernel(std::move(rows), 4);
    if (kernel.empty()) return std::nullopt;
    auto to_matrix = [](const IntegerVector& v) { return IntMatrix2{v[0], v[1], v[2], v[3]}; };

    std::optional<Intertwiner> best;
    auto consider = [&](const IntMatrix2& cand) {
        IntMatrix2 p = detail::sign_normalized(detail::primitive_matrix(cand));
        Integer idx = abs(p.det());
        if (idx == 0) return;
        if (!best || idx < best->index) best = Intertwiner{p, idx};
    };
    if (kernel.size() == 1) {
        consider(to_matrix(kernel[0]));
    } else {
        const IntMatrix2 u = to_matrix(kernel[0]), w = to_matrix(kernel[1]);
        for (int s = -10; s <= 10; ++s)
            for (int t = -10; t <= 10; ++t) {
                if (s == 0 && t == 0) continue;
                consider({s * u.a + t * w.a, s * u.b + t * w.b, s * u.c + t * w.c, s * u.d + t * w.d});
            }
    }
    if (best && !(best->p * a == b * best->p))
        throw Error(ErrorKind::VerificationFailed, "intertwiner does not satisfy PA = BP");
    return best;
}

struct VirtualConjugacy {
    bool virtually_conjugate = false;
    std::optional<Intertwiner> witness;
};

inline VirtualConjugacy virtually_conjugate(const IntMatrix2& a, const IntMatrix2& b) {
    require_anosov(a);
    require_anosov(b);
    if (a.trace() != b.trace()) return {};
    auto w = intertwiner(a, b);
    if (!w) throw Error(ErrorKind::VerificationFailed, "equal traces but no intertwiner found");
    return {true, std::move(w)};
}

/// Least n >= 1 with trace(A^n) = s.
inline std::optional<unsigned long> has_power_with_trace(const IntMatrix2& a, const Integer& s) {
    require_anosov(a);
    const Integer t = a.trace();
    const Integer base = abs(t);
    const Integer target = abs(s);
    Integer prev = 2, cur = base;
    for (unsigned long n = 1; cur <= target; ++n) {
        // trace(A^n) = (-1)^n t_n(|t|) when t < 0.
        Integer signed_trace = (t < 0 && n % 2 == 1) ? Integer(-cur) : cur;
        if (signed_trace == s) return n;
        Integer next = base * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return std::nullopt;
}

}  // namespace solvgenus
