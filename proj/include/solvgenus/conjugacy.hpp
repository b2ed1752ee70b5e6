#pragma once

// Conjugacy of hyperbolic elements of SL(2, Z) and unit representation
// by the monodromy form.
//
// Conjugacy is decided with the positive-word invariant: every hyperbolic
// matrix of positive trace is conjugate to a matrix with positive entries,
// such a matrix factors uniquely as a word in R = [[1,1],[0,1]] and
// S = [[1,0],[1,1]], and two hyperbolic matrices are conjugate exactly when
// their words agree up to cyclic rotation.
//
// Unit representation runs the classical reduction of indefinite binary
// quadratic forms: a form of discriminant D > 4 represents +1 (resp. -1)
// iff +1 (resp. -1) occurs as a leading coefficient in its cycle of reduced
// forms.

#include "solvgenus/core_algebra.hpp"
#include "solvgenus/quadratic_irrational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace solvgenus {

/// Exponents (a1, b1, ..., ak, bk) of R^a1 S^b1 ... R^ak S^bk, read cyclically.
struct CyclicWord {
    std::vector<Integer> exponents;

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend bool operator<(const CyclicWord& l, const CyclicWord& r) {
        return std::lexicographical_compare(l.exponents.begin(), l.exponents.end(), r.exponents.begin(),
                                            r.exponents.end());
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            out += (i % 2 == 0 ? "R^" : "S^") + exponents[i].str() + (i + 1 < exponents.size() ? " " : "");
        return out;
    }
};

inline IntMatrix2 word_matrix(const CyclicWord& w) {
    IntMatrix2 m = IntMatrix2::identity();
    for (std::size_t i = 0; i < w.exponents.size(); ++i)
        m = m * (i % 2 == 0 ? r_power(w.exponents[i]) : s_power(w.exponents[i]));
    return m;
}

/// Result of reducing an Anosov matrix L: conjugator * L * conjugator^{-1}
/// equals sign * word_matrix(word), with word in canonical rotation.
struct WordReduction {
    int sign = 1;
    CyclicWord word;
    IntMatrix2 conjugator = IntMatrix2::identity();
};

namespace detail {

struct Block {
    bool is_r;
    Integer count;
};

inline IntMatrix2 block_matrix(const Block& b) { return b.is_r ? r_power(b.count) : s_power(b.count); }

inline IntMatrix2 blocks_product(const std::vector<Block>& blocks, std::size_t from, std::size_t to) {
    IntMatrix2 m = IntMatrix2::identity();
    for (std::size_t i = from; i < to; ++i) m = m * block_matrix(blocks[i]);
    return m;
}

/// Conjugates a positive-trace hyperbolic matrix to one with positive entries.
/// On return m = k * m_in * k^{-1}.
inline void conjugate_to_positive(IntMatrix2& m, IntMatrix2& k) {
    static const IntMatrix2 j{0, -1, 1, 0};
    auto step = [&](const IntMatrix2& g) {
        m = conjugate_by(g, m);
        k = g * k;
    };
    for (;;) {
        // Slopes of the expanding and contracting eigenvectors: roots of
        // c w^2 + (d - a) w - b = 0; c != 0 for hyperbolic m.
        Integer disc = m.trace() * m.trace() - 4;
        QuadraticIrrational expanding(m.a - m.d, 1, 2 * m.c, disc);
        QuadraticIrrational contracting(m.a - m.d, -1, 2 * m.c, disc);
        int se = expanding.sign(), sc = contracting.sign();
        if (se > 0 && sc < 0) break;
        if (se < 0 && sc > 0) {
            step(j);
            continue;
        }
        Integer fe = expanding.floor(), fc = contracting.floor();
        if (fe != fc) {
            // Translate so the larger root lands in (0, 1) and the other below 0.
            step(r_power(-std::max(fe, fc)));
        } else {
            // Both roots share an integer part: strip it and invert.
            step(r_power(-fe));
            step(j);
        }
    }
}

/// Factors a matrix with nonnegative entries in SL(2, Z) as a product of R and S blocks.
inline std::vector<Block> peel_positive(IntMatrix2 m) {
    std::vector<Block> blocks;
    auto push = [&](bool is_r, const Integer& n) {
        if (!blocks.empty() && blocks.back().is_r == is_r)
            blocks.back().count += n;
        else
            blocks.push_back({is_r, n});
    };
    while (!(m == IntMatrix2::identity())) {
        if (m.c == 0) {
            push(true, m.b);
            break;
        }
        if (m.b == 0) {
            push(false, m.c);
            break;
        }
        if (m.a >= m.c && m.b >= m.d) {
            Integer n = std::min(Integer(m.a / m.c), Integer(m.b / m.d));
            m = r_power(-n) * m;
            push(true, n);
        } else if (m.c >= m.a && m.d >= m.b) {
            Integer n = std::min(Integer(m.c / m.a), Integer(m.d / m.b));
            m = s_power(-n) * m;
            push(false, n);
        } else {
            throw Error(ErrorKind::VerificationFailed, "positive matrix does not factor over R, S: " + m.a.str());
        }
    }
    return blocks;
}

}  // namespace detail

inline WordReduction reduce_to_word(const IntMatrix2& l) {
    require_anosov(l);
    WordReduction out;
    out.sign = l.trace() > 0 ? 1 : -1;
    IntMatrix2 m = out.sign > 0 ? l : -l;
    IntMatrix2 k = IntMatrix2::identity();
    detail::conjugate_to_positive(m, k);

    std::vector<detail::Block> blocks = detail::peel_positive(m);
    // Rotate so the word starts with R and ends with S. Moving a trailing
    // block X to the front conjugates by X; moving a leading block to the back
    // conjugates by its inverse.
    if (blocks.size() > 1 && blocks.front().is_r == blocks.back().is_r) {
        detail::Block last = blocks.back();
        blocks.pop_back();
        k = detail::block_matrix(last) * k;
        blocks.front().count += last.count;
    }
    if (!blocks.front().is_r) {
        detail::Block first = blocks.front();
        blocks.erase(blocks.begin());
        blocks.push_back(first);
        k = detail::block_matrix(first).inverse() * k;
    }
    if (blocks.size() % 2 != 0 || blocks.size() < 2)
        throw Error(ErrorKind::VerificationFailed, "hyperbolic word must alternate R and S");

    std::vector<Integer> exps;
    for (const auto& b : blocks) exps.push_back(b.count);
    std::size_t best = 0;
    const std::size_t n = exps.size();
    for (std::size_t shift = 2; shift < n; shift += 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const Integer& cand = exps[(shift + i) % n];
            const Integer& cur = exps[(best + i) % n];
            if (cand != cur) {
                if (cand < cur) best = shift;
                break;
            }
        }
    }
    if (best != 0) k = detail::blocks_product(blocks, 0, best).inverse() * k;
    for (std::size_t i = 0; i < n; ++i) out.word.exponents.push_back(exps[(best + i) % n]);
    out.conjugator = k;
    return out;
}

/// (sign, canonical word); equal pairs exactly for SL(2, Z)-conjugate inputs.
inline std::pair<int, CyclicWord> cyclic_word(const IntMatrix2& l) {
    WordReduction r = reduce_to_word(l);
    return {r.sign, std::move(r.word)};
}

enum class Group { SL, GL };

struct ConjugacyResult {
    bool conjugate = false;
    /// K with K A K^{-1} = B; det K = +1 in SL mode, +1 or -1 in GL mode.
    std::optional<IntMatrix2> witness;
};

inline ConjugacyResult are_conjugate(const IntMatrix2& a, const IntMatrix2& b, Group group = Group::SL) {
    require_sl2(a);
    require_sl2(b);
    WordReduction ra = reduce_to_word(a);
    WordReduction rb = reduce_to_word(b);
    if (ra.sign == rb.sign && ra.word == rb.word) return {true, rb.conjugator.inverse() * ra.conjugator};
    if (group == Group::GL) {
        const IntMatrix2 flip = reflection();
        WordReduction rm = reduce_to_word(conjugate_by(flip, b));
        if (ra.sign == rm.sign && ra.word == rm.word) return {true, flip * rm.conjugator.inverse() * ra.conjugator};
    }
    return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Indefinite form reduction

/// A form in the reduction cycle together with the substitution producing it:
/// form(v) == original(transform * v) for every v.
struct CycleEntry {
    MonodromyForm form;
    IntMatrix2 transform;
};

/// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, with root = floor(sqrt(D)).
inline bool is_reduced(const MonodromyForm& f, const Integer& root) {
    Integer twice_a = 2 * abs(f.qa);
    return f.qb > 0 && f.qb <= root && twice_a + f.qb > root && twice_a - f.qb <= root;
}

/// One normalization-reduction step (a, b, c) -> (c, b', (b'^2 - D) / 4c) via
/// the substitution [[0, -1], [1, s]] with b' = -b + 2cs.
inline CycleEntry rho_step(const CycleEntry& e, const Integer& disc, const Integer& root) {
    const MonodromyForm& f = e.form;
    Integer span = 2 * abs(f.qc);
    Integer b2;
    if (abs(f.qc) > root) {
        b2 = (-f.qb) % span;
        if (b2 < 0) b2 += span;
        if (b2 > abs(f.qc)) b2 -= span;
    } else {
        Integer r = (root + f.qb) % span;
        if (r < 0) r += span;
        b2 = root - r;
    }
    Integer shift = (f.qb + b2) / (2 * f.qc);
    MonodromyForm next{f.qc, b2, (b2 * b2 - disc) / (4 * f.qc)};
    return {next, e.transform * IntMatrix2{0, -1, 1, shift}};
}

/// The full cycle of reduced forms properly equivalent to f. Requires a
/// positive non-square discriminant.
inline std::vector<CycleEntry> reduction_cycle(const MonodromyForm& f) {
    const Integer disc = f.disc();
    if (disc <= 0 || is_square(disc))
        throw std::invalid_argument("reduction_cycle: discriminant must be a positive non-square");
    const Integer root = isqrt(disc);
    CycleEntry cur{f, IntMatrix2::identity()};
    while (!is_reduced(cur.form, root)) cur = rho_step(cur, disc, root);
    std::vector<CycleEntry> cycle{cur};
    for (;;) {
        cur = rho_step(cur, disc, root);
        if (cur.form == cycle.front().form) break;
        cycle.push_back(cur);
    }
    return cycle;
}

/// A slope c with Q_L(c) = value, |value| = 1; c . L(c) = 1 as curves on T^2.
struct UnitWitness {
    PrimitiveSlope curve;
    Vec2 vector;  ///< the oriented representative with Q_L(vector) = value
    int value;
};

/// Searches for a slope with Q_L(c) exactly equal to value (+1 or -1).
inline std::optional<UnitWitness> represent_value(const IntMatrix2& l, int value) {
    require_anosov(l);
    const MonodromyForm q = monodromy_form(l);
    for (const CycleEntry& e : reduction_cycle(q)) {
        if (e.form.qa == value) {
            Vec2 v = e.transform.column(0);
            if (q(v) != value) throw Error(ErrorKind::VerificationFailed, "unit witness does not verify");
            return UnitWitness{PrimitiveSlope(v), v, value};
        }
    }
    return std::nullopt;
}

/// A slope with |Q_L(c)| = 1 if one exists, preferring Q_L(c) = +1.
inline std::optional<UnitWitness> represent_unit(const IntMatrix2& l) {
    if (auto w = represent_value(l, 1)) return w;
    return represent_value(l, -1);
}

/// One representative per SL(2, Z)-conjugacy class of trace t, |t| >= 3,
/// ordered by canonical word. Each representative is sign * word_matrix(word).
inline std::vector<IntMatrix2> classes_of_trace(const Integer& t) {
    if (abs(t) <= 2) throw Error(ErrorKind::TraceTooSmall, "classes_of_trace needs |t| >= 3, got " + t.str());
    if (t < 0) {
        std::vector<IntMatrix2> out;
        for (const auto& m : classes_of_trace(-t)) out.push_back(-m);
        return out;
    }
    const Integer disc = t * t - 4;
    const Integer root = isqrt(disc);
    // The axis must reach height sqrt(3)/2 and pass near the arc of the unit
    // circle bounding the standard fundamental domain.
    const Integer c_max = isqrt(disc / 3);
    std::map<CyclicWord, IntMatrix2> found;
    for (Integer c = -c_max; c <= c_max; ++c) {
        if (c == 0) continue;
        Integer spread = 2 * abs(c) + root + 1;
        for (Integer delta = -spread; delta <= spread; ++delta) {
            if ((t + delta) % 2 != 0) continue;
            Integer a = (t + delta) / 2, d = (t - delta) / 2;
            Integer num = a * d - 1;
            if (num % c != 0) continue;
            IntMatrix2 cand{a, num / c, c, d};
            CyclicWord w = cyclic_word(cand).second;
            found.try_emplace(w, word_matrix(w));
        }
    }
    std::vector<IntMatrix2> out;
    for (auto& [w, m] : found) out.push_back(m);
    return out;
}

}  // namespace solvgenus
