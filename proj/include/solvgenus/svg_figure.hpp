#pragma once

// SVG 1.1 drawing of the axis of [[m, -1], [1, 0]] against the tiling by
// translates of the fundamental domain D: the semicircles C_0 .. C_m, the
// axis, the arc alpha between C_0 and C_m, the cone points i and exp(pi i/3),
// and for |m| = 3 the order-2 points n + i on the axis.
//
// Coordinates come from exact data and are rounded to six decimals only at
// emission, so output is byte-identical for a given input.

#include "solvgenus/modular_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace solvgenus {

struct Palette {
    std::string background = "#ffffff";
    std::string domain_fill = "#d9d9d9";
    std::string domain_stroke = "#8c8c8c";
    std::string circle_stroke = "#404040";
    std::string axis_stroke = "#1f77b4";
    std::string alpha_stroke = "#d62728";
    std::string point_fill = "#000000";
    std::string corner_fill = "#ff7f0e";
};

namespace detail {

inline std::string fixed6(double v) {
    if (std::fabs(v) < 5e-7) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Canvas {
    double x_min, x_max, y_max;
    static constexpr double scale = 100.0;

    double px(double x) const { return (x - x_min) * scale; }
    double py(double y) const { return (y_max - y) * scale; }
    std::string X(double x) const { return fixed6(px(x)); }
    std::string Y(double y) const { return fixed6(py(y)); }
    std::string R(double r) const { return fixed6(r * scale); }
};

}  // namespace detail

/// Pixel coordinates of the alpha endpoints as they appear in the SVG.
struct FigureLayout {
    double x_min, x_max, y_max;
    std::string c0_endpoint_cx, c0_endpoint_cy, cm_endpoint_cx, cm_endpoint_cy;
};

inline FigureLayout figure_layout(const Integer& m) {
    AlphaArc arc = alpha_arc(m);
    const double mv = m.convert_to<double>();
    const double radius = std::sqrt(arc.axis_radius_sq.convert_to<double>());
    detail::Canvas cv{mv > 0 ? -1.0 : mv - 1.0, mv > 0 ? mv + 1.0 : 1.0, std::max(2.0, radius + 0.5)};
    return {cv.x_min,
            cv.x_max,
            cv.y_max,
            cv.X(arc.on_c0.x_value()),
            cv.Y(arc.on_c0.y_value()),
            cv.X(arc.on_cm.x_value()),
            cv.Y(arc.on_cm.y_value())};
}

inline std::string render_figure(const Integer& m, const Palette& pal = {}) {
    const AlphaArc arc = alpha_arc(m);
    const FigureLayout layout = figure_layout(m);
    const detail::Canvas cv{layout.x_min, layout.x_max, layout.y_max};
    const double mv = m.convert_to<double>();
    const double center = arc.axis_center.convert_to<double>();
    const double radius = std::sqrt(arc.axis_radius_sq.convert_to<double>());
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    const double width = (cv.x_max - cv.x_min) * cv.scale;
    const double height = cv.y_max * cv.scale;
    const long lo = static_cast<long>(std::min(0.0, mv)), hi = static_cast<long>(std::max(0.0, mv));

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fixed6(width) + "\" height=\"" +
         detail::fixed6(height) + "\" viewBox=\"0 0 " + detail::fixed6(width) + " " + detail::fixed6(height) + "\">\n";
    s += "<title>Axis of [[" + m.str() + ",-1],[1,0]] and the arc alpha</title>\n";
    s += "<desc>alpha endpoint on C_0: x = " + to_string(arc.on_c0.x) + ", y^2 = " + to_string(arc.on_c0.y_sq) +
         " (" + domain_position_name(arc.c0_endpoint_position) + " of D" +
         (arc.at_corner ? ", coincides with a corner of D" : "") + "); endpoint on C_m: x = " +
         to_string(arc.on_cm.x) + ", y^2 = " + to_string(arc.on_cm.y_sq) + "</desc>\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + detail::fixed6(width) + "\" height=\"" + detail::fixed6(height) +
         "\" fill=\"" + pal.background + "\"/>\n";

    // Translates D + k crossed by alpha (sampled; drawing only).
    s += "<g id=\"domains\" fill=\"" + pal.domain_fill + "\" stroke=\"" + pal.domain_stroke + "\" stroke-width=\"1\">\n";
    const double ax_lo = std::min(arc.on_c0.x_value(), arc.on_cm.x_value());
    const double ax_hi = std::max(arc.on_c0.x_value(), arc.on_cm.x_value());
    for (long k = lo; k <= hi; ++k) {
        bool touched = false;
        for (int i = 0; i <= 400 && !touched; ++i) {
            double x = ax_lo + (ax_hi - ax_lo) * i / 400.0;
            if (x < k - 0.5 || x > k + 0.5) continue;
            double y_sq = radius * radius - (x - center) * (x - center);
            if ((x - k) * (x - k) + y_sq >= 1.0 - 1e-9) touched = true;
        }
        if (!touched) continue;
        s += "<path d=\"M " + cv.X(k - 0.5) + " " + cv.Y(cv.y_max) + " L " + cv.X(k - 0.5) + " " + cv.Y(half_sqrt3) +
             " A " + cv.R(1) + " " + cv.R(1) + " 0 0 1 " + cv.X(k + 0.5) + " " + cv.Y(half_sqrt3) + " L " +
             cv.X(k + 0.5) + " " + cv.Y(cv.y_max) + " Z\"/>\n";
    }
    s += "</g>\n";

    s += "<g id=\"unit-circles\" fill=\"none\" stroke=\"" + pal.circle_stroke + "\" stroke-width=\"1.5\">\n";
    for (long k = lo; k <= hi; ++k)
        s += "<path d=\"M " + cv.X(k - 1.0) + " " + cv.Y(0) + " A " + cv.R(1) + " " + cv.R(1) + " 0 0 1 " +
             cv.X(k + 1.0) + " " + cv.Y(0) + "\"/>\n";
    s += "</g>\n";

    s += "<path id=\"axis\" fill=\"none\" stroke=\"" + pal.axis_stroke + "\" stroke-width=\"2\" d=\"M " +
         cv.X(center - radius) + " " + cv.Y(0) + " A " + cv.R(radius) + " " + cv.R(radius) + " 0 0 1 " +
         cv.X(center + radius) + " " + cv.Y(0) + "\"/>\n";

    const double ex0 = arc.on_c0.x_value(), exm = arc.on_cm.x_value(), ey = arc.on_c0.y_value();
    s += "<path id=\"alpha\" fill=\"none\" stroke=\"" + pal.alpha_stroke + "\" stroke-width=\"4\" d=\"M " +
         cv.X(std::min(ex0, exm)) + " " + cv.Y(ey) + " A " + cv.R(radius) + " " + cv.R(radius) + " 0 0 1 " +
         cv.X(std::max(ex0, exm)) + " " + cv.Y(ey) + "\"/>\n";

    s += "<g id=\"alpha-endpoints\" fill=\"" + pal.alpha_stroke + "\">\n";
    s += "<circle id=\"alpha-c0\" cx=\"" + layout.c0_endpoint_cx + "\" cy=\"" + layout.c0_endpoint_cy + "\" r=\"4\"/>\n";
    s += "<circle id=\"alpha-cm\" cx=\"" + layout.cm_endpoint_cx + "\" cy=\"" + layout.cm_endpoint_cy + "\" r=\"4\"/>\n";
    s += "</g>\n";

    auto marker = [&](const std::string& id, double x, double y, const std::string& label, const std::string& fill) {
        s += "<circle id=\"" + id + "\" cx=\"" + cv.X(x) + "\" cy=\"" + cv.Y(y) + "\" r=\"3\" fill=\"" + fill + "\"/>\n";
        s += "<text x=\"" + detail::fixed6(cv.px(x) + 6) + "\" y=\"" + detail::fixed6(cv.py(y) - 6) +
             "\" font-family=\"serif\" font-size=\"14\">" + label + "</text>\n";
    };
    s += "<g id=\"points\">\n";
    marker("point-i", 0.0, 1.0, "i", pal.point_fill);
    // The corner of D on the side of the arc: exp(pi i/3) for m > 0, exp(2 pi i/3) for m < 0.
    marker("point-rho", mv > 0 ? 0.5 : -0.5, half_sqrt3, mv > 0 ? "exp(&#960;i/3)" : "exp(2&#960;i/3)",
           arc.at_corner ? pal.corner_fill : pal.point_fill);
    std::vector<Integer> cone = order2_points_on_axis(m);
    std::sort(cone.begin(), cone.end(), [](const Integer& l, const Integer& r) { return abs(l) < abs(r); });
    const char* names[] = {"a", "b"};
    for (std::size_t i = 0; i < cone.size() && i < 2; ++i)
        marker(std::string("point-") + names[i], cone[i].convert_to<double>(), 1.0,
               std::string(names[i]) + " = " + cone[i].str() + "+i", pal.point_fill);
    s += "</g>\n";
    if (arc.at_corner)
        s += "<text id=\"corner-note\" x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">alpha meets C_0 "
             "exactly at a corner of D</text>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace solvgenus
