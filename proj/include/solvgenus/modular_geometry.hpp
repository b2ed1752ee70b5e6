#pragma once

// Exact upper-half-plane data for the axis of a hyperbolic matrix.
//
// A hyperbolic A = [[a, b], [c, d]] acts on the upper half plane by
// z -> (az + b)/(cz + d). Its axis is the semicircle orthogonal to the real
// line whose endpoints are the roots of c z^2 + (d - a) z - b = 0.
//
// D = { x + iy : |x| <= 1/2, x^2 + y^2 >= 1 } is the standard fundamental
// domain of PSL(2, Z), and C_n is the unit semicircle centered at n. For the
// standard form [[m, -1], [1, 0]] the axis is orthogonal to C_0 and C_m, and
// the arc of the axis between them is a fundamental domain for the action.
//
// Every predicate here is exact. Floating point is used only for the
// translation length and for drawing.

#include "solvgenus/centralizer.hpp"
#include "solvgenus/core_algebra.hpp"
#include "solvgenus/quadratic_irrational.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace solvgenus {

struct Geodesic {
    QuadraticIrrational lower;  ///< endpoint z_- on the real axis
    QuadraticIrrational upper;  ///< endpoint z_+, z_- < z_+
    Rational center;
    Rational radius_sq;
    /// |trace| / 2 = cosh(translation_length / 2), kept exactly.
    Rational half_trace;
    double translation_length;
};

inline Geodesic axis(const IntMatrix2& m) {
    require_anosov(m);
    if (m.c == 0) throw Error(ErrorKind::VerticalAxis, "c = 0 forces a parabolic matrix");
    const Integer t = m.trace();
    const Integer disc = t * t - 4;
    QuadraticIrrational r1(m.a - m.d, 1, 2 * m.c, disc);
    QuadraticIrrational r2(m.a - m.d, -1, 2 * m.c, disc);
    if (r2 < r1) std::swap(r1, r2);
    const double half = abs(t).convert_to<double>() / 2.0;
    return Geodesic{r1,
                    r2,
                    make_rational(m.a - m.d, 2 * m.c),
                    make_rational(disc, 4 * m.c * m.c),
                    Rational(abs(t), 2),
                    2.0 * std::acosh(half)};
}

/// A point x + iy of the upper half plane with x rational and y = sqrt(y_sq).
struct HalfPlanePoint {
    Rational x;
    Rational y_sq;

    double x_value() const { return x.convert_to<double>(); }
    double y_value() const { return std::sqrt(y_sq.convert_to<double>()); }
};

enum class DomainPosition { Interior, Boundary, Outside };

inline const char* domain_position_name(DomainPosition p) {
    switch (p) {
    case DomainPosition::Interior: return "interior";
    case DomainPosition::Boundary: return "boundary";
    case DomainPosition::Outside: return "outside";
    }
    return "";
}

inline DomainPosition in_fundamental_domain(const HalfPlanePoint& z) {
    if (z.y_sq <= 0) throw Error(ErrorKind::NotUpperHalfPlane, "y must be positive");
    const Rational half(1, 2);
    const Rational ax = z.x < 0 ? Rational(-z.x) : z.x;
    const Rational norm_sq = z.x * z.x + z.y_sq;
    if (ax > half || norm_sq < 1) return DomainPosition::Outside;
    if (ax == half || norm_sq == 1) return DomainPosition::Boundary;
    return DomainPosition::Interior;
}

struct OrthogonalityCertificate {
    std::string circles;
    /// (distance between centers)^2 and r1^2 + r2^2; equal iff orthogonal.
    Rational center_distance_sq;
    Rational radii_sq_sum;
    bool holds;
};

struct AlphaArc {
    Integer m;
    HalfPlanePoint on_c0;
    HalfPlanePoint on_cm;
    Rational axis_center;
    Rational axis_radius_sq;
    std::vector<OrthogonalityCertificate> certificates;
    DomainPosition c0_endpoint_position;
    /// |x| < 1/2: the C_0 endpoint lies in the open arc D n C_0.
    bool inside_c0_arc;
    /// The C_0 endpoint coincides with a corner exp(pi i/3) or exp(2 pi i/3) of D.
    bool at_corner;
};

/// The arc of the axis of [[m, -1], [1, 0]] running from C_0 to C_m.
inline AlphaArc alpha_arc(const Integer& m) {
    if (abs(m) < 3) throw Error(ErrorKind::TraceTooSmall, "alpha_arc needs |m| >= 3, got " + m.str());
    const Rational center = make_rational(m, 2);
    const Rational radius_sq = make_rational(m * m - 4, 4);
    // Subtracting x^2 + y^2 = 1 from (x - m/2)^2 + y^2 = (m^2 - 4)/4 gives m x = 2.
    const Rational x0 = make_rational(2, m);
    const Rational y_sq = 1 - x0 * x0;
    AlphaArc out{m, {x0, y_sq}, {Rational(m) - x0, y_sq}, center, radius_sq, {}, DomainPosition::Outside, false, false};

    auto certify = [&](const std::string& name, const Rational& other_center) {
        Rational dist_sq = (center - other_center) * (center - other_center);
        Rational sum = radius_sq + 1;
        out.certificates.push_back({name, dist_sq, sum, dist_sq == sum});
    };
    certify("C_0 orthogonal to axis", Rational(0));
    certify("C_m orthogonal to axis", Rational(m));

    for (const HalfPlanePoint& p : {out.on_c0, out.on_cm}) {
        bool on_axis = (p.x - center) * (p.x - center) + p.y_sq == radius_sq;
        if (!on_axis) throw Error(ErrorKind::VerificationFailed, "alpha endpoint is not on the axis");
    }
    out.c0_endpoint_position = in_fundamental_domain(out.on_c0);
    out.at_corner = out.on_c0.x == Rational(1, 2) || out.on_c0.x == Rational(-1, 2);
    out.inside_c0_arc = out.on_c0.x < Rational(1, 2) && out.on_c0.x > Rational(-1, 2);
    return out;
}

/// Integers n for which n + i lies on the axis of [[m, -1], [1, 0]]:
/// (n - m/2)^2 + 1 = (m^2 - 4)/4, i.e. (2n - m)^2 = m^2 - 8.
inline std::vector<Integer> order2_points_on_axis(const Integer& m) {
    std::vector<Integer> out;
    const Integer rhs = m * m - 8;
    if (rhs < 0 || !is_square(rhs)) return out;
    const Integer root = isqrt(rhs);
    for (const Integer& s : {Integer(-root), root}) {
        if ((s + m) % 2 != 0) continue;
        Integer n = (s + m) / 2;
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

/// Whether the projected axis of L passes through the order-2 cone point of
/// the modular surface; equivalent to L being conjugate to its inverse.
inline bool hits_order2_cone(const IntMatrix2& l) { return is_reversible(l).reversible; }

}  // namespace solvgenus
