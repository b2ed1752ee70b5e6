#pragma once

// Subcommand front end shared by the solvgenus binary and the CLI tests.
//
// Exit codes: 0 success, 1 output file could not be written, 2 parse error,
// 3 domain error (NotAnosov, NotSL2, ...), 4 a printed witness failed
// re-verification. Data goes to `out`, diagnostics to `err`.

#include "solvgenus/solvgenus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace solvgenus::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kIoError = 1, kParseError = 2, kDomainError = 3, kVerificationError = 4 };

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
inline Json integer_json(const Integer& x) {
    if (fits_int64(x)) return x.convert_to<std::int64_t>();
    return x.str();
}

inline Json rational_json(const Rational& x) { return to_string(x); }

inline Json quadratic_json(const QuadraticIrrational& q) { return Json{{"exact", q.str()}, {"approx", q.to_double()}}; }

inline Json point_json(const HalfPlanePoint& p) {
    return Json{{"x", rational_json(p.x)}, {"y_squared", rational_json(p.y_sq)}, {"x_approx", p.x_value()},
                {"y_approx", p.y_value()}};
}

class Verification {
public:
    void check(const std::string& name, bool holds) { entries_.push_back({name, holds}); }

    bool all_hold() const {
        for (const auto& e : entries_)
            if (!e.holds) return false;
        return true;
    }

    std::string first_failure() const {
        for (const auto& e : entries_)
            if (!e.holds) return e.name;
        return {};
    }

    Json to_json() const {
        Json arr = Json::array();
        for (const auto& e : entries_) arr.push_back({{"identity", e.name}, {"holds", e.holds}});
        return arr;
    }

    const std::vector<IdentityCheck>& entries() const { return entries_; }

private:
    std::vector<IdentityCheck> entries_;
};

inline Json curve_json(const LeveledCurve& lc) {
    return Json{{"curve", format_slope(lc.curve)}, {"level", rational_json(lc.level)}};
}

inline Json report_json(const ClassificationReport& r) {
    Json j;
    j["input"] = format_matrix(r.input);
    j["trace"] = integer_json(r.trace);
    j["anosov"] = r.anosov;
    j["genus"] = r.genus;
    j["irreducible_splitting_count"] = r.irreducible_splitting_count;
    j["splitting_type"] = splitting_type_name(r.splitting_type);
    if (r.standard_form) {
        const auto& sf = *r.standard_form;
        j["standard_form"] = {{"m_signed", integer_json(sf.m_signed)},
                              {"target", format_matrix(standard_form_matrix(sf.m_signed))},
                              {"conjugator", format_matrix(sf.conjugator)},
                              {"conjugator_det", sf.conjugator_det},
                              {"unit_value", sf.unit_value}};
    } else {
        j["standard_form"] = nullptr;
    }
    j["witness_curve"] = r.witness_curve ? Json(format_slope(*r.witness_curve)) : Json(nullptr);
    j["orientation_reversing_identification"] = r.orientation_reversing_identification;
    Json spines = Json::array();
    for (const auto& s : r.spines) {
        Json curves = Json::array();
        for (const auto& c : s.curves) curves.push_back(curve_json(c));
        spines.push_back({{"kind", spine_kind_name(s.kind)},
                          {"curves", curves},
                          {"transported_curve", s.transported_curve ? Json(format_slope(*s.transported_curve)) : Json(nullptr)},
                          {"text", s.text}});
    }
    j["spines"] = spines;
    if (r.involution_data) {
        const auto& inv = *r.involution_data;
        Json ids = Json::array();
        for (const auto& id : inv.identities) ids.push_back({{"identity", id.name}, {"holds", id.holds}});
        j["involution_data"] = {{"rho", format_matrix(inv.rho)},
                                {"fixed_circles", Json::array({curve_json(inv.fixed_middle), curve_json(inv.fixed_base)})},
                                {"identities", ids},
                                {"central_involution_note", inv.central_involution_note}};
    } else {
        j["involution_data"] = nullptr;
    }
    j["annotations"] = r.annotations;
    return j;
}

/// Exact re-checks of every witness a classification report carries.
inline void verify_report(const ClassificationReport& r, Verification& v) {
    const MonodromyForm q = monodromy_form(r.input);
    v.check("disc(Q_L) = trace^2 - 4", q.disc() == r.trace * r.trace - 4);
    v.check("genus 2 iff standard form present", (r.genus == 2) == r.standard_form.has_value());
    v.check("splitting count 2 iff genus 2 and |trace| = 3",
            (r.irreducible_splitting_count == 2) == (r.genus == 2 && abs(r.trace) == 3));
    if (r.standard_form) {
        const auto& sf = *r.standard_form;
        v.check("K L K^-1 = [[t,-1],[1,0]]", conjugate_by(sf.conjugator, r.input) == standard_form_matrix(r.trace));
        v.check("det K = " + std::to_string(sf.conjugator_det), sf.conjugator.det() == sf.conjugator_det);
        v.check("|Q_L(witness_curve)| = 1", abs(q(sf.witness_curve.vector())) == 1);
        for (const auto& s : r.spines)
            if (s.transported_curve)
                v.check("|Q_L(" + format_slope(*s.transported_curve) + ")| = 1", abs(q(s.transported_curve->vector())) == 1);
    }
    if (r.involution_data)
        for (const auto& id : r.involution_data->identities) v.check(id.name, id.holds);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string report_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "monodromy L = " << format_matrix(r.input) << ", trace " << r.trace << "\n";
    os << "anosov: yes  [|trace| > 2: solvmanifold]\n";
    os << "heegaard genus: " << r.genus << "  [genus-2 criterion: unit curve c . L(c) = 1]\n";
    os << "irreducible splittings up to isotopy: " << r.irreducible_splitting_count << "  ["
       << (r.genus == 3 ? "weakly reducible genus-3 uniqueness"
                        : (r.irreducible_splitting_count == 2 ? "trace +-3: two classes" : "|trace| > 3: uniqueness"))
       << "]\n";
    os << "splitting type: " << splitting_type_name(r.splitting_type) << "\n";
    if (r.standard_form) {
        const auto& sf = *r.standard_form;
        os << "standard form: K L K^-1 = " << format_matrix(standard_form_matrix(sf.m_signed)) << " with K = "
           << format_matrix(sf.conjugator) << " (det " << sf.conjugator_det << ")  [standard-form conjugacy]\n";
        os << "unit curve: " << format_slope(*r.witness_curve) << " with Q_L = " << sf.unit_value << "\n";
    }
    for (const auto& s : r.spines) {
        os << "spine (" << spine_kind_name(s.kind) << "): " << s.text;
        if (s.transported_curve) os << "; in input coordinates the curve is " << format_slope(*s.transported_curve);
        os << "\n";
    }
    if (r.involution_data) {
        const auto& inv = *r.involution_data;
        os << "involution rho = " << format_matrix(inv.rho) << "; fixed circles " << format_slope(inv.fixed_middle.curve)
           << " x {" << to_string(inv.fixed_middle.level) << "} and " << format_slope(inv.fixed_base.curve) << " x {"
           << to_string(inv.fixed_base.level) << "}  [trace +-3 involutions]\n";
        for (const auto& id : inv.identities) os << "  " << id.name << ": " << (id.holds ? "holds" : "FAILS") << "\n";
    }
    return os.str();
}

namespace detail {

inline Palette load_palette(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read palette file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("palette file: ") + e.what());
    }
    Palette p;
    auto take = [&](const char* key, std::string& field) {
        if (j.contains(key)) field = j.at(key).get<std::string>();
    };
    take("background", p.background);
    take("domain_fill", p.domain_fill);
    take("domain_stroke", p.domain_stroke);
    take("circle_stroke", p.circle_stroke);
    take("axis_stroke", p.axis_stroke);
    take("alpha_stroke", p.alpha_stroke);
    take("point_fill", p.point_fill);
    take("corner_fill", p.corner_fill);
    return p;
}

struct Output {
    Json result;
    Verification verification;
    std::string text;
};

inline Output run_classify(const IntMatrix2& l) {
    ClassificationReport r = classify(l);
    Output o;
    o.result = report_json(r);
    verify_report(r, o.verification);
    o.text = report_text(r);
    return o;
}

inline Json word_json(const WordReduction& w) {
    return Json{{"sign", w.sign}, {"word", w.word.str()}, {"representative", format_matrix(w.sign > 0 ? word_matrix(w.word) : -word_matrix(w.word))}};
}

inline Output run_conjugate(const IntMatrix2& a, const IntMatrix2& b, Group group) {
    require_anosov(a);
    require_anosov(b);
    Output o;
    ConjugacyResult sl = are_conjugate(a, b, Group::SL);
    ConjugacyResult gl = are_conjugate(a, b, Group::GL);
    const ConjugacyResult& chosen = group == Group::SL ? sl : gl;
    o.result["A"] = format_matrix(a);
    o.result["B"] = format_matrix(b);
    o.result["group"] = group == Group::SL ? "sl" : "gl";
    o.result["conjugate"] = chosen.conjugate;
    o.result["witness"] = chosen.witness ? Json(format_matrix(*chosen.witness)) : Json(nullptr);
    o.result["witness_det"] = chosen.witness ? integer_json(chosen.witness->det()) : Json(nullptr);
    o.result["sl_conjugate"] = sl.conjugate;
    o.result["gl_conjugate"] = gl.conjugate;
    o.result["cyclic_words"] = {{"A", word_json(reduce_to_word(a))}, {"B", word_json(reduce_to_word(b))}};
    for (const auto* r : {&sl, &gl}) {
        if (!r->witness) continue;
        const char* g = r == &sl ? "SL" : "GL";
        o.verification.check(std::string(g) + " witness: K A K^-1 = B", conjugate_by(*r->witness, a) == b);
        o.verification.check(std::string(g) + " witness determinant",
                             r == &sl ? r->witness->det() == 1 : r->witness->is_unimodular());
    }
    std::ostringstream os;
    os << "A = " << format_matrix(a) << ", B = " << format_matrix(b) << "\n";
    os << "SL(2,Z)-conjugate: " << yes_no(sl.conjugate) << ", GL(2,Z)-conjugate: " << yes_no(gl.conjugate)
       << "  [positive-word invariant]\n";
    if (chosen.witness) os << "witness K = " << format_matrix(*chosen.witness) << " with K A K^-1 = B\n";
    o.text = os.str();
    return o;
}

inline Output run_classes(const Integer& t) {
    Output o;
    std::vector<IntMatrix2> reps = classes_of_trace(t);
    Json classes = Json::array();
    std::ostringstream os;
    os << "trace " << t << ": " << reps.size() << " SL(2,Z)-conjugacy class(es)  [class enumeration]\n";
    for (const auto& m : reps) {
        auto [sign, word] = cyclic_word(m);
        classes.push_back({{"representative", format_matrix(m)}, {"sign", sign}, {"word", word.str()}});
        o.verification.check("representative " + format_matrix(m) + " has trace t and det 1", m.trace() == t && m.in_sl2());
        os << "  " << format_matrix(m) << "  (" << (sign > 0 ? "+" : "-") << " " << word.str() << ")\n";
    }
    o.result = {{"trace", integer_json(t)}, {"count", reps.size()}, {"classes", classes}};
    o.text = os.str();
    return o;
}

inline Output run_centralizer(const IntMatrix2& l) {
    Output o;
    CentralizerDescription c = centralizer_description(l);
    o.result["base"] = format_matrix(c.base);
    o.result["sl_part"] = c.sl_part;
    o.result["gl_extra"] = c.gl_extra ? Json(format_matrix(*c.gl_extra)) : Json(nullptr);
    o.result["gl_extra_square"] = c.gl_extra ? Json(c.gl_extra_square) : Json(nullptr);
    o.result["reversible"] = c.reversibility.reversible;
    o.result["reversibility_witness"] =
        c.reversibility.witness ? Json(format_matrix(*c.reversibility.witness)) : Json(nullptr);
    o.verification.check("reversible iff |m| = 3", c.reversibility.reversible == (abs(l.a) == 3));
    o.verification.check("coset representative present iff |m| = 3", c.gl_extra.has_value() == (abs(l.a) == 3));
    if (c.gl_extra) {
        o.verification.check("B commutes with L", commutes(*c.gl_extra, l));
        o.verification.check("det B = -1", c.gl_extra->det() == -1);
    }
    if (c.reversibility.witness)
        o.verification.check("K L K^-1 = L^-1", conjugate_by(*c.reversibility.witness, l) == l.inverse());
    std::ostringstream os;
    os << "L = " << format_matrix(l) << "\n";
    os << "centralizer in SL(2,Z): " << c.sl_part << "  [commuting matrices are +-L^n]\n";
    if (c.gl_extra)
        os << "extra GL(2,Z) coset: B L^n with B = " << format_matrix(*c.gl_extra) << ", B^2 = " << c.gl_extra_square
           << "  [det -1 coset exists only for |m| = 3]\n";
    else
        os << "no det -1 element commutes with L\n";
    os << "reversible (L ~ L^-1 in SL(2,Z)): " << yes_no(c.reversibility.reversible);
    if (c.reversibility.witness) os << ", K = " << format_matrix(*c.reversibility.witness);
    os << "\n";
    o.text = os.str();
    return o;
}

inline Output run_commensurable(const IntMatrix2& a, const IntMatrix2& b) {
    Output o;
    VirtualConjugacy vc = virtually_conjugate(a, b);
    auto pa = has_power_with_trace(a, b.trace());
    auto pb = has_power_with_trace(b, a.trace());
    o.result["A"] = format_matrix(a);
    o.result["B"] = format_matrix(b);
    o.result["trace_A"] = integer_json(a.trace());
    o.result["trace_B"] = integer_json(b.trace());
    o.result["virtually_conjugate"] = vc.virtually_conjugate;
    if (vc.witness)
        o.result["intertwiner"] = {{"P", format_matrix(vc.witness->p)}, {"index", integer_json(vc.witness->index)}};
    else
        o.result["intertwiner"] = nullptr;
    o.result["least_power_of_A_with_trace_B"] = pa ? Json(*pa) : Json(nullptr);
    o.result["least_power_of_B_with_trace_A"] = pb ? Json(*pb) : Json(nullptr);
    if (vc.witness) {
        const IntMatrix2& p = vc.witness->p;
        o.verification.check("P A = B P", p * a == b * p);
        o.verification.check("det P != 0 and index = |det P|", p.det() != 0 && abs(p.det()) == vc.witness->index);
        o.verification.check("entries of P have gcd 1", p.content() == 1);
    }
    if (pa) o.verification.check("trace(A^n) = trace(B)", mat_pow(a, static_cast<long>(*pa)).trace() == b.trace());
    if (pb) o.verification.check("trace(B^n) = trace(A)", mat_pow(b, static_cast<long>(*pb)).trace() == a.trace());
    std::ostringstream os;
    os << "A = " << format_matrix(a) << " (trace " << a.trace() << "), B = " << format_matrix(b) << " (trace "
       << b.trace() << ")\n";
    os << "virtually conjugate: " << yes_no(vc.virtually_conjugate) << "  [equal traces]\n";
    if (vc.witness)
        os << "intertwiner P = " << format_matrix(vc.witness->p) << ", P A = B P, index " << vc.witness->index << "\n";
    if (pa) os << "trace(A^" << *pa << ") = trace(B)  [finite covers]\n";
    if (pb) os << "trace(B^" << *pb << ") = trace(A)  [finite covers]\n";
    o.text = os.str();
    return o;
}

inline Output run_geodesic(const IntMatrix2& l) {
    Output o;
    Geodesic g = axis(l);
    bool cone = hits_order2_cone(l);
    o.result["matrix"] = format_matrix(l);
    o.result["trace"] = integer_json(l.trace());
    o.result["endpoints"] = {{"lower", quadratic_json(g.lower)}, {"upper", quadratic_json(g.upper)}};
    o.result["center"] = rational_json(g.center);
    o.result["radius_squared"] = rational_json(g.radius_sq);
    o.result["half_trace"] = rational_json(g.half_trace);
    o.result["translation_length"] = g.translation_length;
    o.result["hits_order2_cone"] = cone;
    o.verification.check("endpoints are fixed points: c z^2 + (d-a) z - b = 0",
                         (g.lower * g.lower * Rational(l.c) + g.lower * Rational(l.d - l.a) + Rational(-l.b)).sign() == 0 &&
                             (g.upper * g.upper * Rational(l.c) + g.upper * Rational(l.d - l.a) + Rational(-l.b)).sign() == 0);
    o.verification.check("center and radius match the endpoints",
                         (g.lower + g.upper) == QuadraticIrrational::rational(2 * g.center, g.lower.disc()) &&
                             (g.upper - g.lower) * (g.upper - g.lower) ==
                                 QuadraticIrrational::rational(4 * g.radius_sq, g.lower.disc()));
    std::ostringstream os;
    os << "axis of " << format_matrix(l) << ": endpoints " << g.lower.str() << " and " << g.upper.str() << "\n";
    os << "center " << to_string(g.center) << ", radius^2 " << to_string(g.radius_sq) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15f", g.translation_length);
    os << "translation length 2 arccosh(" << to_string(g.half_trace) << ") = " << buf << "\n";
    os << "passes through the order-2 cone point: " << yes_no(cone) << "  [reversibility]\n";
    if (is_standard_form(l)) {
        AlphaArc arc = alpha_arc(l.a);
        Json certs = Json::array();
        for (const auto& c : arc.certificates) {
            certs.push_back({{"circles", c.circles},
                             {"center_distance_squared", rational_json(c.center_distance_sq)},
                             {"radii_squared_sum", rational_json(c.radii_sq_sum)},
                             {"holds", c.holds}});
            o.verification.check(c.circles, c.holds);
        }
        Json pts = Json::array();
        for (const auto& n : order2_points_on_axis(l.a)) pts.push_back(integer_json(n) );
        o.result["alpha_arc"] = {{"endpoint_on_C0", point_json(arc.on_c0)},
                                 {"endpoint_on_Cm", point_json(arc.on_cm)},
                                 {"orthogonality", certs},
                                 {"C0_endpoint_position", domain_position_name(arc.c0_endpoint_position)},
                                 {"inside_C0_arc_of_D", arc.inside_c0_arc},
                                 {"at_corner_of_D", arc.at_corner}};
        o.result["order2_points_on_axis"] = pts;
        o.verification.check("z_+ z_- = 1", g.lower * g.upper == QuadraticIrrational::rational(1, g.lower.disc()));
        os << "alpha meets C_0 at x = " << to_string(arc.on_c0.x) << ", y^2 = " << to_string(arc.on_c0.y_sq) << " ("
           << domain_position_name(arc.c0_endpoint_position) << " of D"
           << (arc.at_corner ? ", exactly at a corner" : "") << (arc.inside_c0_arc ? ", inside the arc D n C_0" : "")
           << ")\n";
        for (const auto& n : order2_points_on_axis(l.a)) os << "order-2 point " << n << "+i lies on the axis\n";
    }
    o.text = os.str();
    return o;
}

inline Output run_figure(const Integer& m, const std::string& path, const std::string& palette_path) {
    Palette pal = palette_path.empty() ? Palette{} : load_palette(palette_path);
    std::string svg = render_figure(m, pal);
    AlphaArc arc = alpha_arc(m);
    FigureLayout layout = figure_layout(m);
    Output o;
    o.verification.check("SVG carries the C_0 endpoint at its exact coordinates",
                         svg.find("cx=\"" + layout.c0_endpoint_cx + "\" cy=\"" + layout.c0_endpoint_cy + "\"") !=
                             std::string::npos);
    for (const auto& c : arc.certificates) o.verification.check(c.circles, c.holds);
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << svg)) throw std::ios_base::failure("cannot write '" + path + "'");
    o.result = {{"output", path},
                {"m", integer_json(m)},
                {"endpoint_on_C0", point_json(arc.on_c0)},
                {"C0_endpoint_position", domain_position_name(arc.c0_endpoint_position)},
                {"at_corner_of_D", arc.at_corner},
                {"bytes", svg.size()}};
    std::ostringstream os;
    os << "wrote " << path << " (" << svg.size() << " bytes)\n";
    if (arc.at_corner) os << "note: alpha meets C_0 exactly at a corner of D\n";
    o.text = os.str();
    return o;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solvgenus: Heegaard splittings of torus bundles with Anosov monodromy", "solvgenus"};
    app.require_subcommand(1);
    bool json = false;
    std::string mat, mat_a, mat_b, trace_text, m_text, path, palette, group = "sl";

    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "Emit a JSON report");
        sub->add_flag("--text", [&](std::int64_t) { json = false; }, "Emit a human-readable summary (default)");
    };
    auto* classify_cmd = app.add_subcommand("classify", "Heegaard genus and irreducible splittings of M_L");
    classify_cmd->add_option("-m,--matrix", mat, "Monodromy 'a,b;c,d'")->required();
    add_json(classify_cmd);
    auto* conj_cmd = app.add_subcommand("conjugate", "Decide conjugacy of two Anosov matrices");
    conj_cmd->add_option("-A", mat_a, "First matrix")->required();
    conj_cmd->add_option("-B", mat_b, "Second matrix")->required();
    conj_cmd->add_option("--group", group, "sl or gl")->check(CLI::IsMember({"sl", "gl"}));
    add_json(conj_cmd);
    auto* classes_cmd = app.add_subcommand("classes", "Conjugacy classes of a given trace");
    classes_cmd->add_option("-t,--trace", trace_text, "Trace, |t| >= 3")->required();
    add_json(classes_cmd);
    auto* cent_cmd = app.add_subcommand("centralizer", "Centralizer of a standard form [[m,-1],[1,0]]");
    cent_cmd->add_option("-m,--matrix", mat, "Standard-form matrix")->required();
    add_json(cent_cmd);
    auto* comm_cmd = app.add_subcommand("commensurable", "Virtual conjugacy with an intertwiner witness");
    comm_cmd->add_option("-A", mat_a, "First matrix")->required();
    comm_cmd->add_option("-B", mat_b, "Second matrix")->required();
    add_json(comm_cmd);
    auto* geo_cmd = app.add_subcommand("geodesic", "Axis data in the upper half plane");
    geo_cmd->add_option("-m,--matrix", mat, "Anosov matrix")->required();
    add_json(geo_cmd);
    auto* fig_cmd = app.add_subcommand("figure", "SVG of the axis of [[m,-1],[1,0]] and the arc alpha");
    fig_cmd->add_option("--m", m_text, "m with |m| >= 3")->required();
    fig_cmd->add_option("-o,--output", path, "Output SVG path")->required();
    fig_cmd->add_option("--palette", palette, "JSON palette file");
    add_json(fig_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    detail::Output o;
    Json input;
    try {
        if (name == "classify") {
            IntMatrix2 l = parse_matrix(mat);
            input = {{"matrix", format_matrix(l)}};
            o = detail::run_classify(l);
        } else if (name == "conjugate") {
            IntMatrix2 a = parse_matrix(mat_a), b = parse_matrix(mat_b);
            input = {{"A", format_matrix(a)}, {"B", format_matrix(b)}, {"group", group}};
            o = detail::run_conjugate(a, b, group == "sl" ? Group::SL : Group::GL);
        } else if (name == "classes") {
            Integer t = parse_integer(trace_text);
            input = {{"trace", integer_json(t)}};
            o = detail::run_classes(t);
        } else if (name == "centralizer") {
            IntMatrix2 l = parse_matrix(mat);
            input = {{"matrix", format_matrix(l)}};
            o = detail::run_centralizer(l);
        } else if (name == "commensurable") {
            IntMatrix2 a = parse_matrix(mat_a), b = parse_matrix(mat_b);
            input = {{"A", format_matrix(a)}, {"B", format_matrix(b)}};
            o = detail::run_commensurable(a, b);
        } else if (name == "geodesic") {
            IntMatrix2 l = parse_matrix(mat);
            input = {{"matrix", format_matrix(l)}};
            o = detail::run_geodesic(l);
        } else if (name == "figure") {
            Integer m = parse_integer(m_text);
            input = {{"m", integer_json(m)}, {"output", path}};
            o = detail::run_figure(m, path, palette);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::NotPrimitive) return kParseError;
        if (e.kind() == ErrorKind::VerificationFailed) return kVerificationError;
        return kDomainError;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }

    if (!o.verification.all_hold()) {
        err << "error: verification failed: " << o.verification.first_failure() << "\n";
        return kVerificationError;
    }
    if (json) {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = name;
        doc["input"] = input;
        doc["result"] = o.result;
        doc["verification"] = o.verification.to_json();
        out << doc.dump(2) << "\n";
    } else {
        out << o.text;
    }
    return kOk;
}

}  // namespace solvgenus::cli
