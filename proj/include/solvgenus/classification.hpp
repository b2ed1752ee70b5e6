#pragma once

// Heegaard genus and irreducible-splitting census of a solvmanifold M_L.
//
// The verdict is a classifier over known results, not a topological
// computation:
//   - M_L has genus 2 exactly when L is conjugate to [[t, -1], [1, 0]] with
//     t = trace L, which happens exactly when some slope c has c . L(c) = 1.
//     Those splittings are strongly irreducible.
//   - Otherwise the only irreducible splitting is the weakly reducible
//     standard genus-3 splitting.
//   - Genus-2 splittings are unique up to isotopy for |t| > 3; for |t| = 3
//     there are exactly two classes, distinguished by a pair of commuting
//     hyperelliptic involutions whose product is the central involution -I.

#include "solvgenus/centralizer.hpp"
#include "solvgenus/conjugacy.hpp"
#include "solvgenus/core_algebra.hpp"
#include "solvgenus/text_format.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solvgenus {

struct StandardFormResult {
    Integer m_signed;
    /// K with K L K^{-1} = [[m_signed, -1], [1, 0]].
    IntMatrix2 conjugator;
    int conjugator_det = 1;
    /// Q_L at the unit curve used to build the conjugator.
    int unit_value = 1;
    PrimitiveSlope witness_curve;
};

/// Conjugates L onto [[t, -1], [1, 0]] from a slope v with |Q_L(v)| = 1.
///
/// With Q_L(v) = +1 the basis (v', v), v' = -Lv, has det +1 and L acts on it
/// by the standard form. With only Q_L(v) = -1 available, v' = Lv gives the
/// mirror [[t, 1], [-1, 0]] and diag(1, -1) flips it back, so the resulting
/// conjugator reverses orientation.
inline std::optional<StandardFormResult> standard_form(const IntMatrix2& l) {
    require_anosov(l);
    const Integer t = l.trace();
    const IntMatrix2 target = standard_form_matrix(t);
    if (auto w = represent_value(l, 1)) {
        const Vec2& v = w->vector;
        IntMatrix2 basis = IntMatrix2::from_columns(-(l * v), v);
        IntMatrix2 k = basis.inverse();
        if (!(conjugate_by(k, l) == target)) throw Error(ErrorKind::VerificationFailed, "standard form conjugator");
        return StandardFormResult{t, k, 1, 1, w->curve};
    }
    if (auto w = represent_value(l, -1)) {
        const Vec2& v = w->vector;
        IntMatrix2 basis = IntMatrix2::from_columns(l * v, v);
        IntMatrix2 k = reflection() * basis.inverse();
        if (!(conjugate_by(k, l) == target)) throw Error(ErrorKind::VerificationFailed, "mirror standard form conjugator");
        return StandardFormResult{t, k, -1, -1, w->curve};
    }
    return std::nullopt;
}

enum class SpineKind { Genus2, StandardGenus3 };

inline const char* spine_kind_name(SpineKind k) { return k == SpineKind::Genus2 ? "genus2" : "standard_genus3"; }

/// A fiber curve at a height of the mapping torus T^2 x [0, 1].
struct LeveledCurve {
    PrimitiveSlope curve;
    Rational level;
};

struct SpineDescription {
    SpineKind kind;
    /// Curves in standard-form coordinates (genus 2 only).
    std::vector<LeveledCurve> curves;
    /// The spine curve pulled back to the coordinates of the input matrix.
    std::optional<PrimitiveSlope> transported_curve;
    std::string text;
};

struct IdentityCheck {
    std::string name;
    bool holds;
};

struct InvolutionData {
    IntMatrix2 rho{0, 1, 1, 0};
    /// Fixed circles of the involution (x, t) -> (rho x, 1 - t).
    LeveledCurve fixed_middle{PrimitiveSlope(1, 1), Rational(1, 2)};
    LeveledCurve fixed_base{PrimitiveSlope(2, 3), Rational(0)};
    std::vector<IdentityCheck> identities;
    std::string central_involution_note;
};

enum class SplittingType { StronglyIrreducibleGenus2, WeaklyReducibleGenus3 };

inline const char* splitting_type_name(SplittingType t) {
    return t == SplittingType::StronglyIrreducibleGenus2 ? "strongly_irreducible_genus2" : "weakly_reducible_genus3";
}

struct SplittingDescriptors {
    std::vector<SpineDescription> spines;
    std::optional<InvolutionData> involution;
};

struct ClassificationReport {
    IntMatrix2 input;
    Integer trace;
    bool anosov = true;
    int genus = 3;
    int irreducible_splitting_count = 1;
    SplittingType splitting_type = SplittingType::WeaklyReducibleGenus3;
    std::optional<StandardFormResult> standard_form;
    std::optional<PrimitiveSlope> witness_curve;
    std::vector<SpineDescription> spines;
    std::optional<InvolutionData> involution_data;
    /// True when the standard-form identification reverses orientation.
    bool orientation_reversing_identification = false;
    std::vector<std::string> annotations;
};

namespace detail {

inline std::string curve_text(const PrimitiveSlope& c) { return "(" + c.p().str() + "," + c.q().str() + ")"; }

inline std::string level_text(const Rational& r) { return to_string(r); }

inline std::string genus2_spine_text(const LeveledCurve& lc) {
    return "lambda u (" + curve_text(lc.curve) + " x {" + level_text(lc.level) +
           "}): the vertical circle lambda (image of {0} x R in M_L) joined with the fiber curve " +
           curve_text(lc.curve) + " at level " + level_text(lc.level) + "; c . L(c) = 1 makes its complement a genus-2 handlebody";
}

inline const char* genus3_spine_text() {
    return "standard genus-3 splitting: fiber tori T^2 x {0} and T^2 x {1/2}, with the vertical tube E_A x [1/2,1] "
           "added on one side and E_B x [0,1/2] on the other, where E_B is disjoint from L(E_A)";
}

}  // namespace detail

/// Spines (and, for |trace| = 3, the involution certificates) in the
/// coordinates where L is [[m, -1], [1, 0]].
inline SplittingDescriptors splitting_descriptors(const IntMatrix2& l, const std::optional<StandardFormResult>& sf) {
    require_anosov(l);
    SplittingDescriptors out;
    if (!sf) {
        out.spines.push_back({SpineKind::StandardGenus3, {}, std::nullopt, detail::genus3_spine_text()});
        return out;
    }
    const Integer& m = sf->m_signed;
    const IntMatrix2 std_l = standard_form_matrix(m);
    if (m != l.trace() || !(conjugate_by(sf->conjugator, l) == std_l))
        throw Error(ErrorKind::InconsistentWitness, "conjugator does not carry L to its standard form");

    const IntMatrix2 back = sf->conjugator.inverse();
    const PrimitiveSlope alpha(0, 1);
    LeveledCurve spine_a{alpha, Rational(0)};
    out.spines.push_back({SpineKind::Genus2, {spine_a}, apply(back, alpha), detail::genus2_spine_text(spine_a)});
    if (abs(m) != 3) return out;

    // The det -1 centralizer element moves alpha to the other spine curve.
    const IntMatrix2 coset = *centralizer_description(std_l).gl_extra;
    LeveledCurve spine_x{apply(coset, alpha), Rational(1, 2)};
    out.spines.push_back({SpineKind::Genus2, {spine_x}, apply(back, spine_x.curve), detail::genus2_spine_text(spine_x)});

    InvolutionData inv;
    const IntMatrix2& rho = inv.rho;
    const Vec2 alpha_v{0, 1};
    const Vec2 gamma_v{2, m > 0 ? 3 : -3};
    const PrimitiveSlope beta_fixed(1, 1);
    const PrimitiveSlope gamma(gamma_v);
    inv.fixed_middle = {beta_fixed, Rational(1, 2)};
    inv.fixed_base = {gamma, Rational(0)};
    inv.identities = {
        {"rho L rho = L^-1", rho * std_l * rho == std_l.inverse()},
        {"(rho L)^2 = I", (rho * std_l) * (rho * std_l) == IntMatrix2::identity()},
        {"rho(alpha) = -L(alpha)", rho * alpha_v == -(std_l * alpha_v)},
        {"L(gamma) = rho(gamma)", std_l * gamma_v == rho * gamma_v},
        {"rho fixes beta", rho * beta_fixed.vector() == beta_fixed.vector()},
        {"beta . alpha = 1", intersection_number(beta_fixed, alpha) == 1},
        {"gamma . alpha = 2", intersection_number(gamma, alpha) == 2},
        {"rho preserves the second spine slope", apply(rho, spine_x.curve) == spine_x.curve},
        {"rho (-rho) = -I", rho * (-rho) == -IntMatrix2::identity()},
        {"-I is not a power of L", express_power(-IntMatrix2::identity(), std_l).sign == -1},
    };
    for (const auto& id : inv.identities)
        if (!id.holds) throw Error(ErrorKind::VerificationFailed, "involution identity failed: " + id.name);
    inv.central_involution_note =
        "the hyperelliptic involutions of the two genus-2 splittings are induced by rho and -rho; their product is the "
        "central involution induced by -I, which is not isotopic to the identity since -I is not a power of L, so the "
        "two splittings are not isotopic (recorded, not machine-checked)";
    out.involution = std::move(inv);
    return out;
}

inline ClassificationReport classify(const IntMatrix2& l) {
    require_sl2(l);
    require_anosov(l);
    ClassificationReport r;
    r.input = l;
    r.trace = l.trace();
    r.standard_form = standard_form(l);
    SplittingDescriptors desc = splitting_descriptors(l, r.standard_form);
    r.spines = std::move(desc.spines);
    r.involution_data = std::move(desc.involution);
    if (r.standard_form) {
        r.genus = 2;
        r.splitting_type = SplittingType::StronglyIrreducibleGenus2;
        r.irreducible_splitting_count = abs(r.trace) == 3 ? 2 : 1;
        r.witness_curve = r.standard_form->witness_curve;
        r.orientation_reversing_identification = r.standard_form->conjugator_det == -1;
        r.annotations.push_back("genus 2: a slope c with c . L(c) = 1 exists, so L is conjugate to [[t,-1],[1,0]]");
        if (r.irreducible_splitting_count == 2)
            r.annotations.push_back("|trace| = 3: exactly two isotopy classes of irreducible splittings");
        else
            r.annotations.push_back("|trace| > 3: the irreducible splitting is unique up to isotopy");
        if (r.orientation_reversing_identification)
            r.annotations.push_back("only Q_L = -1 is represented: the identification with the standard form reverses orientation");
    } else {
        r.annotations.push_back("no slope c has c . L(c) = 1: the standard weakly reducible genus-3 splitting is the only irreducible one");
    }
    r.annotations.push_back("isotopy statements are consequences of known results and are not re-derived");
    return r;
}

}  // namespace solvgenus
