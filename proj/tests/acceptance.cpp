// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// against its budget. Exit status is nonzero if any criterion fails.

#include "oracles.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace solvgenus;

namespace {

struct Failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

std::string str(const IntMatrix2& m) { return format_matrix(m); }

// ---------------------------------------------------------------------------

void trace_three_uniqueness() {
    for (int t : {3, -3}) {
        auto reps = classes_of_trace(t);
        require(reps.size() == 1, "classes_of_trace(" + std::to_string(t) + ") has " + std::to_string(reps.size()) + " classes");
    }
    std::vector<IntMatrix2> cands;
    for (int a = 0; a <= 3; ++a) cands.push_back({a, -1 + 3 * a - a * a, 1, 3 - a});
    for (const auto& a : cands)
        for (const auto& b : cands) {
            require(a.det() == 1 && a.trace() == 3, "candidate " + str(a) + " is not trace 3 in SL(2,Z)");
            ConjugacyResult r = are_conjugate(a, b);
            require(r.conjugate, str(a) + " not conjugate to " + str(b));
            require(r.witness->det() == 1 && conjugate_by(*r.witness, a) == b, "bad witness for " + str(a) + " -> " + str(b));
        }
}

void figure_eight_fillings() {
    for (int s : {1, -1}) {
        IntMatrix2 l = IntMatrix2{2, 1, 1, 1};
        if (s < 0) l = -l;
        ClassificationReport r = classify(l);
        require(r.genus == 2 && r.irreducible_splitting_count == 2, "wrong verdict for " + str(l));
        require(r.standard_form.has_value(), "no standard form for " + str(l));
        IntMatrix2 target{3 * s, -1, 1, 0};
        const IntMatrix2& k = r.standard_form->conjugator;
        require(k.is_unimodular(), "conjugator not unimodular");
        require(k * l == target * k, "K L != S K entrywise for " + str(l));
        require(conjugate_by(k, l) == target, "K L K^-1 != " + str(target));
    }
}

void uniqueness_above_three() {
    for (int m = -20; m <= 20; ++m) {
        if (std::abs(m) < 4) continue;
        ClassificationReport r = classify(standard_form_matrix(m));
        require(r.genus == 2 && r.irreducible_splitting_count == 1, "wrong verdict for m = " + std::to_string(m));
    }
    ClassificationReport r = classify({1, 2, 2, 5});
    require(r.genus == 3 && r.irreducible_splitting_count == 1 && r.splitting_type == SplittingType::WeaklyReducibleGenus3,
            "wrong verdict for 1,2;2,5");
}

void centralizer_structure() {
    const IntMatrix2 b{-2, 1, -1, 1};
    for (int m : {3, 4, 5}) {
        const IntMatrix2 l = standard_form_matrix(m);
        CentralizerDescription desc = centralizer_description(l);
        require(desc.gl_extra.has_value() == (m == 3), "coset representative presence for m = " + std::to_string(m));
        if (m == 3) {
            require(*desc.gl_extra == b, "coset representative is not -2,1;-1,1");
            require(b.det() == -1 && b * b == l && commutes(b, l), "B identities fail");
        }
        std::size_t powers = 0, coset = 0;
        for (const oracle::M& km : oracle::commuting_scan(oracle::to_oracle(l), 40)) {
            IntMatrix2 k = oracle::to_lib(km);
            IntMatrix2 s = k;
            if (k.det() == -1) {
                require(m == 3, "det -1 element " + str(k) + " commutes with m = " + std::to_string(m));
                s = b.inverse() * k;
                ++coset;
            } else {
                ++powers;
            }
            SignedPower p = express_power(s, l);
            IntMatrix2 back = mat_pow(l, p.exponent);
            require((p.sign > 0 ? back : -back) == s, str(k) + " is not +-L^n (times B)");
        }
        require(powers >= 2, "scan found too few powers");
        require((coset > 0) == (m == 3), "coset elements for m = " + std::to_string(m));
        ReversibilityResult rev = is_reversible(l);
        require(rev.reversible == (m == 3), "reversibility for m = " + std::to_string(m));
        if (rev.reversible) require(conjugate_by(*rev.witness, l) == l.inverse(), "reversing witness fails");
    }
    for (int m : {-3, -4, -5})
        require(is_reversible(standard_form_matrix(m)).reversible == (m == -3), "reversibility for m = " + std::to_string(m));
}

void commensurability() {
    const IntMatrix2 a{2, 1, 1, 1}, b{3, -1, 1, 0};
    auto w = intertwiner(a, b);
    require(w.has_value(), "no intertwiner for 2,1;1,1 and 3,-1;1,0");
    require(w->p * a == b * w->p && w->p.det() != 0, "PA != BP");
    require(!intertwiner(b, standard_form_matrix(4)).has_value(), "intertwiner across traces 3 and 4");
    require(!intertwiner({1, 2, 2, 5}, standard_form_matrix(7)).has_value(), "intertwiner across traces 6 and 7");
    for (int t = 3; t <= 12; ++t) {
        auto reps = classes_of_trace(t);
        for (const auto& x : reps)
            for (const auto& y : reps) {
                auto p = intertwiner(x, y);
                require(p.has_value(), "no intertwiner for " + str(x) + ", " + str(y));
                require(p->p * x == y * p->p && p->p.det() != 0 && p->p.content() == 1, "bad intertwiner " + str(p->p));
                require(p->index == abs(p->p.det()), "index mismatch");
            }
    }
}

void oracle_suites() {
    std::mt19937_64 rng(6);
    int hits = 0;
    for (int i = 0; i < 100; ++i) {
        oracle::M m = oracle::random_anosov(rng, 12, 20);
        IntMatrix2 l = oracle::to_lib(m);
        auto w = represent_unit(l);
        auto brute = oracle::unit_search(m, 1000);
        require(w.has_value() == brute.has_value(), "represent_unit disagrees with brute force on " + str(l));
        if (w) {
            require(abs(monodromy_form(l)(w->curve.vector())) == 1, "unit witness fails on " + str(l));
            ++hits;
        }
    }
    require(hits > 0 && hits < 100, "unit corpus is degenerate");

    auto corpus = oracle::pair_corpus();
    require(corpus.size() == 30, "pair corpus size");
    for (const auto& [ma, mb] : corpus) {
        IntMatrix2 a = oracle::to_lib(ma), b = oracle::to_lib(mb);
        ConjugacyResult r = are_conjugate(a, b);
        bool brute = oracle::conjugator_search(ma, mb, 50).has_value();
        require(r.conjugate == brute, "are_conjugate disagrees with search on " + str(a) + ", " + str(b));
        if (r.conjugate) require(conjugate_by(*r.witness, a) == b, "conjugacy witness fails");
    }

    for (int t : {3, 4, 5, 6}) {
        std::size_t lib = classes_of_trace(t).size(), brute = oracle::class_count(t, 30, 50);
        require(lib == brute, "trace " + std::to_string(t) + ": " + std::to_string(lib) + " classes vs " +
                                  std::to_string(brute) + " by clustering");
        if (t == 4) require(lib == 2, "trace 4 does not give 2 classes");
    }
}

void invariance_properties() {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        IntMatrix2 l = oracle::to_lib(oracle::random_anosov(rng, 15, 30));
        IntMatrix2 k = oracle::to_lib(oracle::random_sl2(rng, 10));
        IntMatrix2 c = conjugate_by(k, l);
        ClassificationReport a = classify(l), b = classify(c), inv = classify(l.inverse());
        require(a.genus == b.genus && a.irreducible_splitting_count == b.irreducible_splitting_count &&
                    a.splitting_type == b.splitting_type && abs(a.trace) == abs(b.trace),
                "classification not conjugation invariant at " + str(l));
        require(a.genus == inv.genus && a.irreducible_splitting_count == inv.irreducible_splitting_count &&
                    a.splitting_type == inv.splitting_type,
                "classification not inversion invariant at " + str(l));
        require(cyclic_word(l) == cyclic_word(c), "cyclic_word not conjugation invariant at " + str(l));
    }
    std::uniform_int_distribution<int> e(-60, 60);
    for (int i = 0; i < 10000; ++i) {
        IntMatrix2 l = oracle::to_lib(oracle::random_anosov(rng, 20, 40));
        IntMatrix2 k = oracle::to_lib(oracle::random_sl2(rng, 10));
        Vec2 v{e(rng), e(rng)};
        require(monodromy_form(conjugate_by(k, l))(k * v) == monodromy_form(l)(v), "Q-equivariance fails");
    }
}

std::optional<boost::property_tree::ptree> attrs_by_id(const boost::property_tree::ptree& t, const std::string& id) {
    for (const auto& [name, child] : t) {
        if (auto a = child.get_child_optional("<xmlattr>.id"); a && a->data() == id) return child.get_child("<xmlattr>");
        if (auto r = attrs_by_id(child, id)) return r;
    }
    return std::nullopt;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void geometry_identities() {
    for (int m = -50; m <= 50; ++m) {
        if (std::abs(m) < 3) continue;
        Rational lhs = Rational(m * m, 4), rhs = 1 + Rational(m * m - 4, 4);
        require(lhs == rhs, "orthogonality identity fails at m = " + std::to_string(m));
        for (const auto& c : alpha_arc(m).certificates) require(c.holds, c.circles + " fails at m = " + std::to_string(m));
    }
    for (long t = 3; t <= 1000000; t += (t < 2000 ? 1 : 991)) {
        double len = axis(standard_form_matrix(t)).translation_length;
        long double lt = t;
        long double ref = 2.0L * std::log((lt + std::sqrt(lt * lt - 4.0L)) / 2.0L);
        require(std::fabs(static_cast<long double>(len) - ref) <= 1e-12L, "translation length off at t = " + std::to_string(t));
    }
    for (long m = 3; m <= 10000; ++m)
        for (long s : {m, -m}) {
            bool solvable = !order2_points_on_axis(s).empty();
            require(solvable == (m == 3), "order-2 incidence wrong at m = " + std::to_string(s));
            for (const auto& n : order2_points_on_axis(s)) {
                Integer lhs = (2 * n - s) * (2 * n - s);
                require(lhs == Integer(s) * s - 8, "order-2 point fails its equation");
            }
        }
    for (int m : {3, 4}) {
        std::string svg = render_figure(m);
        std::istringstream in(svg);
        boost::property_tree::ptree tree;
        try {
            boost::property_tree::read_xml(in, tree);
        } catch (const std::exception& e) {
            throw Failure{"figure m = " + std::to_string(m) + " is not well-formed: " + e.what()};
        }
        AlphaArc arc = alpha_arc(m);
        const double y_max = std::max(2.0, std::sqrt((m * m - 4) / 4.0) + 0.5);
        auto c0 = attrs_by_id(tree, "alpha-c0");
        auto cm = attrs_by_id(tree, "alpha-cm");
        require(c0 && cm, "alpha endpoints missing from figure m = " + std::to_string(m));
        require(c0->get<std::string>("cx") == fixed6((2.0 / m + 1.0) * 100) &&
                    c0->get<std::string>("cy") == fixed6((y_max - std::sqrt(1 - 4.0 / (m * m))) * 100),
                "C_0 endpoint misplaced in figure m = " + std::to_string(m));
        require(cm->get<std::string>("cx") == fixed6((m - 2.0 / m + 1.0) * 100), "C_m endpoint misplaced");
        require(arc.at_corner == (m == 4), "corner flag wrong at m = " + std::to_string(m));
        require((svg.find("corner-note") != std::string::npos) == (m == 4), "corner note wrong at m = " + std::to_string(m));
        require(render_figure(m) == svg, "figure not deterministic");
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void()> body;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "trace +-3 has one conjugacy class", 1.0, trace_three_uniqueness},
        {2, "figure-eight fillings: genus 2, two splittings", 1.0, figure_eight_fillings},
        {3, "uniqueness for |trace| > 3 and the genus-3 example", 1.0, uniqueness_above_three},
        {4, "centralizer scan and reversibility", 30.0, centralizer_structure},
        {5, "intertwiners and commensurability", 5.0, commensurability},
        {6, "brute-force oracle suites", 120.0, oracle_suites},
        {7, "invariance properties", 60.0, invariance_properties},
        {8, "upper half plane identities and figures", 10.0, geometry_identities},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = true;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget_seconds) {
            ok = false;
            detail = "over time budget";
        }
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d %s (%.3f s, budget %.0f s): %s", c.id, ok ? "PASS" : "FAIL", secs,
                      c.budget_seconds, c.name);
        std::cout << line;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << std::endl;
        failed += !ok;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
