#pragma once

// Brute-force reference implementations on plain int64 arithmetic. The
// library is used only for converting matrices in and out, so agreement is an
// independent check.

#include "solvgenus/solvgenus.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct M {
    i64 a, b, c, d;
    i64 det() const { return a * d - b * c; }
    i64 trace() const { return a + d; }
    bool operator==(const M&) const = default;
};

inline M mul(const M& x, const M& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline M to_oracle(const solvgenus::IntMatrix2& m) {
    return {m.a.convert_to<i64>(), m.b.convert_to<i64>(), m.c.convert_to<i64>(), m.d.convert_to<i64>()};
}

inline solvgenus::IntMatrix2 to_lib(const M& m) { return {m.a, m.b, m.c, m.d}; }

// Oracle A: K = [[x, y], [z, w]] with K A = B K. The first row is enumerated;
// B.b != 0 for hyperbolic B, so the first row of K A = B K fixes z and w.
inline std::optional<M> conjugator_search(const M& A, const M& B, i64 bound, bool allow_det_minus_one = false) {
    if (B.b == 0) return std::nullopt;
    for (i64 x = -bound; x <= bound; ++x)
        for (i64 y = -bound; y <= bound; ++y) {
            i64 nz = x * A.a + y * A.c - B.a * x;
            i64 nw = x * A.b + y * A.d - B.a * y;
            if (nz % B.b != 0 || nw % B.b != 0) continue;
            M K{x, y, nz / B.b, nw / B.b};
            if (std::abs(K.c) > bound || std::abs(K.d) > bound) continue;
            i64 det = K.det();
            if (det != 1 && !(allow_det_minus_one && det == -1)) continue;
            if (mul(K, A) == mul(B, K)) return K;
        }
    return std::nullopt;
}

// Oracle B: a slope (p, q) with |det((p,q), A(p,q))| = 1. Such a vector is
// automatically primitive.
inline std::optional<std::pair<i64, i64>> unit_search(const M& A, i64 bound) {
    const i64 qa = A.c, qb = A.d - A.a, qc = -A.b;
    for (i64 q = 0; q <= bound; ++q)
        for (i64 p = -bound; p <= bound; ++p) {
            i64 v = qa * p * p + qb * p * q + qc * q * q;
            if (v == 1 || v == -1) return std::make_pair(p, q);
        }
    return std::nullopt;
}

// Oracle C: every K with entries in [-bound, bound], |det K| = 1 and K L = L K.
inline std::vector<M> commuting_scan(const M& L, i64 bound) {
    std::vector<M> out;
    for (i64 a = -bound; a <= bound; ++a)
        for (i64 b = -bound; b <= bound; ++b)
            for (i64 c = -bound; c <= bound; ++c)
                for (i64 d = -bound; d <= bound; ++d) {
                    M K{a, b, c, d};
                    i64 det = K.det();
                    if (det != 1 && det != -1) continue;
                    if (mul(K, L) == mul(L, K)) out.push_back(K);
                }
    return out;
}

// Oracle D: every trace-t, det-1 matrix with entries in [-bound, bound],
// clustered under Oracle A. Returns the number of clusters.
inline std::size_t class_count(i64 t, i64 bound, i64 search_bound) {
    std::vector<M> all;
    for (i64 a = -bound; a <= bound; ++a) {
        i64 d = t - a;
        if (std::abs(d) > bound) continue;
        for (i64 c = -bound; c <= bound; ++c) {
            if (c == 0) continue;
            i64 num = a * d - 1;
            if (num % c != 0) continue;
            i64 b = num / c;
            if (std::abs(b) > bound) continue;
            all.push_back({a, b, c, d});
        }
    }
    std::vector<M> reps;
    for (const M& m : all) {
        bool found = false;
        for (const M& r : reps)
            if (conjugator_search(m, r, search_bound) || conjugator_search(r, m, search_bound)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(m);
    }
    return reps.size();
}

// Random elements of SL(2, Z) as short products of R^{+-1}, S^{+-1}.
inline M random_sl2(std::mt19937_64& rng, int max_len = 8) {
    static const M gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}};
    std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
    M k{1, 0, 0, 1};
    for (int i = len(rng); i > 0; --i) k = mul(k, gens[pick(rng)]);
    return k;
}

// Random hyperbolic elements with entries in [-bound, bound] and
// 3 <= |trace| <= max_trace, by rejection.
inline M random_anosov(std::mt19937_64& rng, i64 bound, i64 max_trace) {
    std::uniform_int_distribution<i64> e(-bound, bound);
    for (;;) {
        i64 a = e(rng), b = e(rng), c = e(rng);
        if (a == 0) continue;
        i64 num = 1 + b * c;
        if (num % a != 0) continue;
        i64 d = num / a;
        if (std::abs(d) > bound) continue;
        i64 t = std::abs(a + d);
        if (t < 3 || t > max_trace) continue;
        return {a, b, c, d};
    }
}

// Fixed corpus: 20 pairs conjugate by short random products, then pairs of
// equal trace that may or may not be conjugate.
inline std::vector<std::pair<M, M>> pair_corpus() {
    std::mt19937_64 rng(2024);
    std::vector<std::pair<M, M>> out;
    const M seeds[] = {{2, 1, 1, 1}, {3, -1, 1, 0}, {3, 2, 1, 1}, {3, 1, 2, 1}, {5, -1, 1, 0},
                       {-3, -1, 1, 0}, {4, 3, 1, 1}, {1, 2, 2, 5}, {2, 3, 1, 2}, {7, -1, 1, 0}};
    for (int i = 0; i < 20; ++i) {
        const M& a = seeds[i % 10];
        M k = random_sl2(rng, 4);
        M kinv{k.d, -k.b, -k.c, k.a};
        out.push_back({a, mul(mul(k, a), kinv)});
    }
    out.push_back({{3, 2, 1, 1}, {3, 1, 2, 1}});
    out.push_back({{4, -1, 1, 0}, {4, 1, -1, 0}});
    out.push_back({{4, -1, 1, 0}, {3, 1, 2, 1}});
    out.push_back({{5, -1, 1, 0}, {4, 1, 3, 1}});
    out.push_back({{5, -1, 1, 0}, {4, 3, 1, 1}});
    out.push_back({{4, 1, 3, 1}, {4, 3, 1, 1}});
    out.push_back({{6, -1, 1, 0}, {1, 2, 2, 5}});
    out.push_back({{1, 2, 2, 5}, {5, 2, 2, 1}});
    out.push_back({{-3, -1, 1, 0}, {-2, -1, -1, -1}});
    out.push_back({{3, -1, 1, 0}, {-3, 1, -1, 0}});
    return out;
}

}  // namespace oracle
