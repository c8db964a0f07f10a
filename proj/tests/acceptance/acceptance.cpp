// One PASS/FAIL line per acceptance criterion, with wall-clock timing.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "enriques/algebra/parse.hpp"
#include "enriques/config/curve_config.hpp"
#include "enriques/constructions/constructions.hpp"
#include "enriques/derivations/derivation.hpp"
#include "enriques/dynkin/graph.hpp"
#include "enriques/dynkin/parabolic.hpp"
#include "enriques/rules/rules.hpp"
#include "enriques/weierstrass/curve.hpp"

using namespace enriques;
using algebra::FiniteField;
using algebra::RatFunc;
using algebra::var;

namespace {

/// Collects failed expectations for one criterion.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

RatFunc R(std::string_view text, const FiniteField& f = FiniteField::gf2()) { return algebra::parse_ratfunc(text, f); }

// ---------------------------------------------------------------- 1

void discriminant_and_j(Checker& c) {
    using namespace weierstrass;
    const auto y = invariants(curve_Ystar());
    const auto dy = R("(t + 1)^10*(t^2 + t + 1)^2");
    c.expect(y.delta == dy, "Ystar discriminant is " + y.delta.to_string());
    c.expect(y.j == R("t^24") / dy, "Ystar j is " + y.j.to_string());
    const auto r = invariants(curve_R());
    const auto dr = R("(s + 1)^5*(s^2 + s + 1)");
    c.expect(r.delta == dr, "R discriminant is " + r.delta.to_string());
    const auto factors = algebra::factor_univariate(r.delta.num());
    c.expect(factors.size() == 2 && factors[0].factor == algebra::parse_poly("s + 1", FiniteField::gf2()) &&
                 factors[0].multiplicity == 5 && factors[1].multiplicity == 1,
             "R discriminant factorization");
    const auto at = fiber_at(curve_R(), algebra::Place::finite(algebra::parse_poly("s + 1", FiniteField::gf2())));
    c.expect(at.v_delta == 5 && at.kodaira == KodairaType::In(5), "v_{s+1}(delta_R) = 5 with an I5 fiber");
}

// ---------------------------------------------------------------- 2

void point_groups(Checker& c) {
    using namespace weierstrass;
    const auto e = curve_E();
    const auto pts = e_points();
    c.expect(rational_points(e).size() == 5, "E has five GF(4)-points");
    for (int i = 0; i <= 4; ++i)
        c.expect(mul_point(e, i, pts.at("P1")) == pts.at("P" + std::to_string(i)), "P" + std::to_string(i) + " = " + std::to_string(i) + "P1");
    c.expect(mul_point(e, 5, pts.at("P1")).infinity, "5 P1 = 0");
    for (const auto& [a, p] : pts) {
        for (const auto& [b, q] : pts) {
            const int i = a[1] - '0', j = b[1] - '0';
            c.expect(add_points(e, p, q) == pts.at("P" + std::to_string((i + j) % 5)), a + " + " + b);
        }
    }
    const auto y = curve_Ystar();
    const auto s = ystar_sections();
    for (const auto& [name, p] : s) c.expect(on_curve(y, p), name + " lies on Ystar");
    for (int i = 0; i <= 4; ++i) {
        const auto si = "s" + std::to_string(i), mi = "m" + std::to_string(i);
        c.expect(mul_point(y, i, s.at("s1")) == s.at(si), si + " = " + std::to_string(i) + " s1");
        c.expect(add_points(y, s.at("m0"), s.at(si)) == s.at(mi), mi + " = m0 + " + si);
    }
    c.expect(add_points(y, s.at("m0"), s.at("m0")) == s.at("s0"), "2 m0 = s0");
    c.expect(point_order(y, s.at("m1")) == 10, "the sections form Z/10");
}

// ---------------------------------------------------------------- 3

void derivation_closure(Checker& c) {
    using namespace derivations;
    const auto ctx = ParamContext::symbolic();
    const auto hp = p_closure_multiplier(derivation_Dprime());
    c.expect(hp && *hp == R("t^2"), "D'^2 = t^2 D'");
    const auto h = p_closure_multiplier(derivation_D());
    c.expect(h && *h == ctx.a() * ctx.b(), "D^2 = ab D");
    c.expect(ctx.b() == R("a/(a + 1)") && ctx.a() + ctx.b() == ctx.a() * ctx.b(), "b = a/(a + 1), a + b = ab");
    const auto zero = ParamContext::specialized(FiniteField::gf2(), 0);
    c.expect(vector_field_type(derivation_D(zero)) == VectorFieldType::additive, "additive at a = b = 0");
    const auto places = integral_fiber_places(derivation_D());
    std::set<std::string> roots;
    for (const auto& l : places.rational) roots.insert(l.root.to_string());
    c.expect(roots == std::set<std::string>{"a", "a/(a + 1)"} && places.other.empty() && !places.all, "integral fibers {a, b}");
    const auto special = integral_fiber_places(derivation_D(zero));
    std::set<std::string> zroots;
    for (const auto& l : special.rational) zroots.insert(l.root.to_string());
    c.expect(zroots == std::set<std::string>{"0"}, "integral fibers {0} at a = b = 0");
}

// ---------------------------------------------------------------- 4

void divisorial_bookkeeping(Checker& c) {
    const auto y = config::build_Y_config();
    c.expect(y.size() == 34, "34 curves");
    const auto d = derivations::divisorial_part_D();
    const long sq = config::divisor_pairing(y, d, d);
    c.expect(sq == -24, "(D)^2 = " + std::to_string(sq));
    const auto e = derivations::euler_bookkeeping(24, sq, 0);
    c.expect(e.degree == 0, "deg<D> = " + std::to_string(e.degree));
}

// ---------------------------------------------------------------- 5

void graph_cross_validation(Checker& c) {
    using namespace dynkin;
    const auto x = config::quotient_blowdown_gram(config::build_Y_config(), config::integral_set_D());
    const auto g = DualGraph::from_config(x);
    c.expect(find_isomorphism(g, build_type_vii_graph()).has_value(), "quotient graph is isomorphic to the type VII graph");
    std::vector<std::size_t> s1, s2;
    // S2: images of m0..m4; S1: the fifteen other curves.
    for (std::size_t i = 0; i < x.size(); ++i) (x.names()[i][0] == 'm' ? s2 : s1).push_back(i);
    const auto p1 = g.induced(s1), p2 = g.induced(s2);
    c.expect(find_isomorphism(p1, line_graph(build_petersen())).has_value(), "S1-part is the line graph of the Petersen graph");
    bool k5 = p2.size() == 5;
    for (std::size_t a = 0; a < p2.size(); ++a) {
        for (std::size_t b = a + 1; b < p2.size(); ++b) k5 = k5 && p2.mult(a, b) == 2;
    }
    c.expect(k5, "S2-part is K5 with double edges");
    const auto aut = automorphism_count(g);
    c.expect(aut == 120, "automorphism group order " + std::to_string(aut));
}

// ---------------------------------------------------------------- 6

std::vector<std::vector<long>> negated_gram(const dynkin::DualGraph& g, std::uint64_t s) {
    std::vector<std::size_t> vs;
    for (std::uint64_t m = s; m != 0; m &= m - 1) vs.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    std::vector<std::vector<long>> out(vs.size(), std::vector<long>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) out[i][j] = i == j ? 2 : -static_cast<long>(g.mult(vs[i], vs[j]));
    }
    return out;
}

void vinberg(Checker& c) {
    using namespace dynkin;
    const auto vii = build_type_vii_graph();
    std::set<std::string> types;
    for (const auto& p : maximal_parabolics(vii)) types.insert(p.type_string());
    c.expect(types == std::set<std::string>{"A~8", "A~4+A~4", "A~5+A~2+A~1", "A~7+A~1"}, "type VII maximal parabolics");
    const auto v = vinberg_check(vii);
    c.expect(v.criterion_holds && v.finite_index, "Vinberg criterion on type VII");
    const auto e10 = build_e10_graph();
    std::set<std::string> etypes;
    for (const auto& p : maximal_parabolics(e10)) etypes.insert(p.type_string());
    c.expect(etypes == std::set<std::string>{"E~8"}, "E10 maximal parabolics");
    c.expect(vinberg_check(e10).finite_index, "Vinberg criterion on E10");
    c.expect(!vinberg_check(build_cycle_with_pendant(6)).criterion_holds, "6-cycle with pendant fails");
    for (const auto& g : {vii, e10, build_cycle_with_pendant(6)}) {
        std::vector<std::uint64_t> adj;
        for (std::size_t i = 0; i < g.size(); ++i) adj.push_back(g.neighbors(i));
        std::set<std::uint64_t> expected, found;
        for (const auto s : oracle::connected_subsets(adj, 10)) {
            const auto in = oracle::inertia_small(negated_gram(g, s));
            if (in[1] == 0 && in[2] == 1) expected.insert(s);
        }
        for (const auto& comp : connected_parabolics(g)) {
            std::uint64_t m = 0;
            for (const auto i : comp.vertices) m |= std::uint64_t{1} << i;
            found.insert(m);
        }
        c.expect(found == expected, "enumeration agrees with the semidefinite oracle (" + std::to_string(g.size()) + " vertices)");
    }
}

// ---------------------------------------------------------------- 7

void table1(Checker& c) {
    using namespace rules;
    const std::vector<std::pair<std::string, std::string>> expected{{"I", "oxx"},  {"II", "oxx"}, {"III", "xxx"}, {"IV", "xxx"},
                                                                    {"V", "xxx"},  {"VI", "oxx"}, {"VII", "xoo"}};
    const auto table = table1_report();
    c.expect(table.size() == 7, "seven columns");
    for (std::size_t i = 0; i < std::min(table.size(), expected.size()); ++i) {
        std::string cells;
        for (const auto cell : table[i].cells) cells += cell == Cell::exists_by_construction ? 'o' : 'x';
        c.expect(table[i].type == expected[i].first && cells == expected[i].second,
                 "column " + table[i].type + " = " + cells + " (singular, classical, supersingular)");
    }
    const auto facts = builtin_facts("factsVII");
    const auto v = classify_traced(facts);
    bool traced = false;
    for (const auto& e : v.exclusions) {
        const auto& f = facts.fibrations[e.fibration];
        const bool iv_multiple = std::any_of(f.fibers.begin(), f.fibers.end(), [](const FiberFact& x) { return x.label == "IV" && x.multiple; });
        if (e.removed == EnriquesClass::singular && f.to_string() == "(I6, IV[m], I2)" && iv_multiple) traced = true;
    }
    c.expect(traced, "singular excluded by (I6, IV, I2) with forced-multiple IV");
}

// ---------------------------------------------------------------- 8

void constructions_identities(Checker& c) {
    for (const auto& name : {"type_I", "type_II", "type_VI", "kummer"}) {
        for (const auto& r : constructions::verify_case(name)) {
            c.expect(r.status == constructions::Status::pass, r.id + " (" + r.residual + ")");
        }
    }
}

// ---------------------------------------------------------------- 9

void lattice_invariants(Checker& c) {
    const auto e = config::lattice_invariants(config::build_e10_config());
    c.expect(e.rank == 10 && e.determinant == "-1" && e.n_plus == 1 && e.n_minus == 9, "E10: rank 10, det -1, signature (1, 9)");
    const auto x = config::lattice_invariants(config::quotient_blowdown_gram(config::build_Y_config(), config::integral_set_D()));
    c.expect(x.rank == 10 && x.n_plus == 1 && x.n_minus == 9 && x.n_zero == 10, "type VII: rank 10, signature (1, 9), radical 10");
}

// ---------------------------------------------------------------- 10

void non_isotriviality(Checker& c) {
    using namespace weierstrass;
    const auto h = half_fiber_j(R("a"));
    c.expect(h == R("a^48/((a + 1)^20*(a^2 + a + 1)^4)"), "half_fiber_j(a)");
    const auto ja = R("a^24/((a + 1)^10*(a^2 + a + 1)^2)");
    c.expect(h == ja * ja, "equals j(E_a)^2");
    c.expect(!h.is_constant(), "non-constant");
    c.expect(frobenius_base_change(curve_R(), var("s"), var("t")) == curve_Ystar(), "R with s = t^2 is Ystar");
    c.expect(invariants(curve_R()).delta.substitute(var("s"), R("t^2")) == invariants(curve_Ystar()).delta, "delta_R(t^2) = delta_Y");
}

// ---------------------------------------------------------------- 11

void sigma_diagnostics(Checker& c) {
    const auto reports = constructions::verify_sigma_Y();
    for (const char* id : {"constructions.sigma_Y.base_action", "constructions.sigma_Y.section_permutation"}) {
        const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.id == id; });
        c.expect(it != reports.end() && it->status == constructions::Status::pass, id);
    }
    const auto eq = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return r.id == "constructions.sigma_Y.equation_preserved"; });
    c.expect(eq != reports.end() && eq->status != constructions::Status::fail, "equation-preservation residual reported as pass or open");
}

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "discriminant and j-invariant", 1, discriminant_and_j},
        {2, "point groups Z/5 and Z/10", 1, point_groups},
        {3, "derivations D' and D", 1, derivation_closure},
        {4, "divisorial bookkeeping (D)^2 = -24", 1, divisorial_bookkeeping},
        {5, "quotient graph cross-validation", 10, graph_cross_validation},
        {6, "Vinberg criterion and parabolic enumeration", 30, vinberg},
        {7, "existence table from the rule engine", 1, table1},
        {8, "construction identities", 10, constructions_identities},
        {9, "lattice invariants", 1, lattice_invariants},
        {10, "non-isotriviality and Frobenius base change", 1, non_isotriviality},
        {11, "sigma diagnostics", 1, sigma_diagnostics},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(secs < cr.budget_seconds, "over the time budget");
        const bool ok = c.failures().empty();
        failed += ok ? 0 : 1;
        std::printf("%s criterion %2d: %s (%.3f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", cr.number, cr.title, secs, cr.budget_seconds);
        for (const auto& f : c.failures()) std::printf("    failed: %s\n", f.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
