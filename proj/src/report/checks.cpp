#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "enriques/algebra/parse.hpp"
#include "enriques/algebra/univariate.hpp"
#include "enriques/config/curve_config.hpp"
#include "enriques/derivations/derivation.hpp"
#include "enriques/dynkin/graph.hpp"
#include "enriques/dynkin/parabolic.hpp"
#include "enriques/report/report.hpp"
#include "enriques/rules/rules.hpp"
#include "enriques/weierstrass/curve.hpp"

namespace enriques::report {

namespace {

using algebra::FiniteField;
using algebra::RatFunc;
using algebra::var;
using weierstrass::KodairaType;

RatFunc R(std::string_view text, const FiniteField& f = FiniteField::gf2()) { return algebra::parse_ratfunc(text, f); }

CheckResult result(std::string id, bool ok, std::string details, Provenance p = Provenance::computed) {
    return {std::move(id), ok ? Status::pass : Status::fail, std::move(details), p};
}

CheckUnit single(std::string module, std::function<CheckResult()> f) {
    return {std::move(module), [f = std::move(f)] { return std::vector<CheckResult>{f()}; }};
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

// ---------------------------------------------------------------- algebra

std::vector<CheckUnit> algebra_units() {
    std::vector<CheckUnit> u;
    u.push_back(single("algebra", [] {
        // GF(4): w^2 = w + 1, w^3 = 1, every nonzero element invertible.
        const auto f = FiniteField::gf4();
        const auto w = f.generator();
        bool ok = f.mul(w, w) == f.add(w, 1) && f.mul(f.mul(w, w), w) == 1;
        for (algebra::Raw a = 1; a < f.size(); ++a) ok = ok && f.mul(a, f.inv(a)) == 1;
        return result("algebra.gf4_arithmetic", ok, "w^2 = w + 1, w^3 = 1 and inverses in GF(4)");
    }));
    u.push_back(single("algebra", [] {
        const auto d = R("(t + 1)^10*(t^2 + t + 1)^2");
        const auto f = algebra::factor_univariate(d.num());
        std::vector<std::string> parts;
        for (const auto& x : f) parts.push_back("(" + x.factor.to_string() + ")^" + std::to_string(x.multiplicity));
        const bool ok = f.size() == 2 && f[0].multiplicity == 10 && f[1].multiplicity == 2;
        return result("algebra.factor_discriminant", ok, "Ystar discriminant factors as " + join(parts, " "));
    }));
    return u;
}

// ---------------------------------------------------------------- weierstrass

std::vector<CheckUnit> weierstrass_units() {
    using namespace weierstrass;
    std::vector<CheckUnit> u;
    u.push_back({"weierstrass", [] {
                     const auto inv = invariants(curve_Ystar());
                     const auto expected = R("(t + 1)^10*(t^2 + t + 1)^2");
                     return std::vector<CheckResult>{
                         result("weierstrass.ystar_discriminant", inv.delta == expected, "delta = " + inv.delta.to_string()),
                         result("weierstrass.ystar_j", inv.j == R("t^24") / expected, "j = " + inv.j.to_string())};
                 }});
    u.push_back({"weierstrass", [] {
                     const auto inv = invariants(curve_R());
                     const bool disc = inv.delta == R("(s + 1)^5*(s^2 + s + 1)");
                     const auto reports = place_analysis(curve_R());
                     bool i5 = false;
                     std::vector<std::string> rows;
                     for (const auto& r : reports) {
                         rows.push_back(r.place.to_string() + ": v = " + std::to_string(r.v_delta) +
                                        (r.kodaira ? " " + r.kodaira->to_string() : ""));
                         if (!r.place.is_infinity() && r.place.poly() == algebra::parse_poly("s + 1", FiniteField::gf2()))
                             i5 = r.v_delta == 5 && r.kodaira == KodairaType::In(5);
                     }
                     return std::vector<CheckResult>{
                         result("weierstrass.R_discriminant", disc, "delta = " + inv.delta.to_string()),
                         result("weierstrass.R_I5_fibers", i5, join(rows, "; "))};
                 }});
    u.push_back(single("weierstrass", [] {
        const auto fibers = geometric_fibers(place_analysis(curve_Ystar(), {true}));
        std::vector<std::string> labels;
        for (const auto& k : fibers) labels.push_back(k.to_string());
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        return result("weierstrass.ystar_fibers", sorted == std::vector<std::string>{"I10", "I10", "I2", "I2"},
                      "reducible fibers " + join(labels));
    }));
    u.push_back(single("weierstrass", [] {
        const auto c = curve_E();
        const auto pts = e_points();
        const auto all = rational_points(c);
        bool ok = all.size() == 5 && point_order(c, pts.at("P1")) == 5;
        for (int i = 0; i <= 4; ++i) ok = ok && mul_point(c, i, pts.at("P1")) == pts.at("P" + std::to_string(i));
        ok = ok && mul_point(c, 5, pts.at("P1")).infinity;
        return result("weierstrass.E_points_Z5", ok,
                      std::to_string(all.size()) + " points over GF(4); P_i = i P_1 and 5 P_1 = 0");
    }));
    u.push_back(single("weierstrass", [] {
        const auto c = curve_Ystar();
        const auto s = ystar_sections();
        bool ok = true;
        for (const auto& [name, p] : s) ok = ok && on_curve(c, p);
        for (int i = 0; i <= 4; ++i) {
            const auto si = "s" + std::to_string(i), mi = "m" + std::to_string(i);
            ok = ok && mul_point(c, i, s.at("s1")) == s.at(si) && add_points(c, s.at("m0"), s.at(si)) == s.at(mi);
        }
        ok = ok && add_points(c, s.at("m0"), s.at("m0")).infinity && point_order(c, s.at("m1")) == 10;
        return result("weierstrass.ystar_sections_Z10", ok, "s_i = i s_1, m_i = m_0 + s_i, 2 m_0 = s_0, m_1 has order 10");
    }));
    u.push_back({"weierstrass", [] {
                     const auto y = shioda_tate_check(geometric_fibers(place_analysis(curve_Ystar(), {true})), 10,
                                                      kPicardSupersingularK3);
                     const auto r = shioda_tate_check(geometric_fibers(place_analysis(curve_R(), {true})), 5, kPicardRational);
                     std::ostringstream dy, dr;
                     dy << "rho 22, trivial rank " << y.trivial_lattice_rank << ", MW rank " << y.mordell_weil_rank
                        << ", component groups " << y.discriminant_product << ", torsion 10, Artin invariant "
                        << (y.artin_invariant ? std::to_string(*y.artin_invariant) : "none");
                     dr << "rho 10, trivial rank " << r.trivial_lattice_rank << ", MW rank " << r.mordell_weil_rank
                        << ", component groups " << r.discriminant_product << ", torsion 5";
                     return std::vector<CheckResult>{
                         result("weierstrass.shioda_tate_ystar", y.mordell_weil_rank == 0 && y.torsion_consistent, dy.str()),
                         result("weierstrass.shioda_tate_R", r.mordell_weil_rank == 0 && r.torsion_consistent, dr.str())};
                 }});
    u.push_back(single("weierstrass", [] {
        const auto bc = frobenius_base_change(curve_R(), var("s"), var("t"));
        const auto dr = invariants(curve_R()).delta.substitute(var("s"), R("t^2"));
        const bool ok = bc == curve_Ystar() && dr == invariants(curve_Ystar()).delta;
        return result("weierstrass.frobenius_base_change", ok, "R with s = t^2 is " + bc.to_string() + "; delta_R(t^2) = delta_Y");
    }));
    u.push_back(single("weierstrass", [] {
        const auto a = R("a");
        const auto h = half_fiber_j(a);
        const auto ja = R("a^24/((a + 1)^10*(a^2 + a + 1)^2)");
        const bool ok = h == R("a^48/((a + 1)^20*(a^2 + a + 1)^4)") && h == ja * ja && !h.is_constant();
        return result("weierstrass.half_fiber_j", ok, "j = " + h.to_string() + " = j(E_a)^2, non-constant");
    }));
    u.push_back(single("weierstrass", [] {
        const auto c = curve_kummerEF();
        const auto p = CurvePoint::affine(R("0"), R("0"));
        const bool ok = on_curve(c, p) && point_order(c, p) == 2;
        return result("weierstrass.kummer_two_torsion", ok, "(0, 0) is a 2-torsion point of " + c.to_string());
    }));
    return u;
}

// ---------------------------------------------------------------- derivations

std::vector<CheckUnit> derivation_units() {
    using namespace derivations;
    std::vector<CheckUnit> u;
    u.push_back(single("derivations", [] {
        const auto h = p_closure_multiplier(derivation_Dprime());
        return result("derivations.Dprime_closure", h && *h == R("t^2"), "D'^2 = " + (h ? h->to_string() : "none") + " D'");
    }));
    u.push_back(single("derivations", [] {
        const auto ctx = ParamContext::symbolic();
        const auto h = p_closure_multiplier(derivation_D());
        const bool ok = h && *h == ctx.a() * ctx.b();
        return result("derivations.D_closure", ok && vector_field_type(derivation_D()) == VectorFieldType::multiplicative,
                      "D^2 = " + (h ? h->to_string() : "none") + " D = ab D over GF(2)(a), b = a/(a + 1)");
    }));
    u.push_back(single("derivations", [] {
        const auto zero = ParamContext::specialized(FiniteField::gf2(), 0);
        const auto d = derivation_D(zero);
        return result("derivations.additive_at_zero", vector_field_type(d) == VectorFieldType::additive,
                      "at a = b = 0, D^2 = 0");
    }));
    u.push_back(single("derivations", [] {
        auto roots = [](const IntegralFibers& f) {
            std::vector<std::string> out;
            for (const auto& l : f.rational) {
                for (unsigned i = 0; i < l.multiplicity; ++i) out.push_back(l.root.to_string());
            }
            return out;
        };
        const auto generic = roots(integral_fiber_places(derivation_D()));
        const auto special = roots(integral_fiber_places(derivation_D(ParamContext::specialized(FiniteField::gf2(), 0))));
        const bool ok = generic == std::vector<std::string>{"a", "a/(a + 1)"} && special == std::vector<std::string>{"0", "0"};
        return result("derivations.integral_fibers", ok, "t in {" + join(generic) + "}; at a = b = 0: t in {" + join(special) + "}");
    }));
    u.push_back(single("derivations", [] {
        const auto e = euler_bookkeeping(24, -24, 0);
        return result("derivations.euler_bookkeeping", e.degree == 0 && e.verdict == EulerVerdict::divisorial,
                      "24 = deg<D> - K.(D) - (D)^2 with (D)^2 = -24 gives deg<D> = " + std::to_string(e.degree));
    }));
    return u;
}

// ---------------------------------------------------------------- curve_config

std::vector<CheckUnit> config_units() {
    using namespace config;
    std::vector<CheckUnit> u;
    u.push_back(single("curve_config", [] {
        const auto y = build_Y_config();
        bool ok = y.size() == 34;
        for (const char* p : {"1", "inf", "w", "w2"}) {
            ok = ok && divisor_pairing(y, fiber_class(p), fiber_class(p)) == 0 &&
                 divisor_pairing(y, fiber_class(p), fiber_class("1")) == 0 &&
                 divisor_pairing(y, fiber_class(p), {{"s0", 1}}) == 1;
        }
        return result("curve_config.y34_fibers", ok, "34 curves; every fiber class F has F^2 = 0, F.F' = 0 and F.s0 = 1");
    }));
    u.push_back(single("curve_config", [] {
        const auto y = build_Y_config();
        const auto d = derivations::divisorial_part_D();
        const long sq = divisor_pairing(y, d, d);
        return result("curve_config.divisorial_square", sq == -24, "(D)^2 = " + std::to_string(sq));
    }));
    u.push_back(single("curve_config", [] {
        const auto x = quotient_blowdown_gram(build_Y_config(), integral_set_D());
        bool ok = x.size() == 20;
        for (std::size_t i = 0; i < x.size(); ++i) ok = ok && x.gram()[i][i] == -2;
        return result("curve_config.quotient_images", ok, std::to_string(x.size()) + " (-2)-curves on the quotient");
    }));
    auto lattice = [](const std::string& id, const CurveConfig& c, int rank, int n_zero, std::optional<std::string> det) {
        const auto inv = lattice_invariants(c);
        std::ostringstream d;
        d << "rank " << inv.rank << ", signature (" << inv.n_plus << ", " << inv.n_minus << "), radical " << inv.n_zero
          << ", determinant " << inv.determinant;
        const bool ok = inv.rank == rank && inv.n_plus == 1 && inv.n_minus == rank - 1 && inv.n_zero == n_zero &&
                        (!det || inv.determinant == *det);
        return result(id, ok, d.str());
    };
    u.push_back(single("curve_config", [=] { return lattice("curve_config.e10_lattice", build_e10_config(), 10, 0, "-1"); }));
    u.push_back(single("curve_config", [=] {
        return lattice("curve_config.x20_lattice", quotient_blowdown_gram(build_Y_config(), integral_set_D()), 10, 10, std::nullopt);
    }));
    u.push_back(single("curve_config", [] {
        const auto inv = lattice_invariants(build_Y_config());
        std::ostringstream d;
        d << "rank " << inv.rank << ", signature (" << inv.n_plus << ", " << inv.n_minus << "), determinant " << inv.determinant;
        return result("curve_config.y34_lattice", inv.n_plus == 1 && inv.rank <= 22, d.str());
    }));
    return u;
}

// ---------------------------------------------------------------- dynkin

dynkin::DualGraph x20_graph() {
    return dynkin::DualGraph::from_config(config::quotient_blowdown_gram(config::build_Y_config(), config::integral_set_D()));
}

std::map<std::string, std::size_t> group_types(const std::vector<dynkin::ParabolicSubdiagram>& ps) {
    std::map<std::string, std::size_t> out;
    for (const auto& p : ps) ++out[p.type_string()];
    return out;
}

std::string describe(const std::map<std::string, std::size_t>& types) {
    std::vector<std::string> parts;
    for (const auto& [t, n] : types) parts.push_back(t + " (" + std::to_string(n) + ")");
    return join(parts);
}

std::vector<CheckUnit> dynkin_units() {
    using namespace dynkin;
    std::vector<CheckUnit> u;
    u.push_back({"dynkin", [] {
                     const auto g = x20_graph();
                     const bool iso = find_isomorphism(g, build_type_vii_graph()).has_value();
                     const auto aut = automorphism_count(g);
                     // S2: images of m0..m4; S1: the fifteen other curves.
                     std::vector<std::size_t> s1, s2;
                     for (std::size_t v = 0; v < g.size(); ++v) (g.names()[v][0] == 'm' ? s2 : s1).push_back(v);
                     const auto part2 = g.induced(s2), part1 = g.induced(s1);
                     bool k5 = part2.size() == 5;
                     for (std::size_t a = 0; a < part2.size(); ++a) {
                         for (std::size_t b = a + 1; b < part2.size(); ++b) k5 = k5 && part2.mult(a, b) == 2;
                     }
                     const bool line = find_isomorphism(part1, line_graph(build_petersen())).has_value();
                     return std::vector<CheckResult>{
                         result("dynkin.quotient_is_type_vii", iso,
                                std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) +
                                    " edges; isomorphic to the type VII graph"),
                         result("dynkin.quotient_automorphisms", aut == 120, std::to_string(aut) + " automorphisms"),
                         result("dynkin.s1_part_petersen_line", line,
                                std::to_string(part1.size()) + " curves forming the line graph of the Petersen graph"),
                         result("dynkin.s2_part_double_k5", k5, std::to_string(part2.size()) + " curves pairwise joined by double edges")};
                 }});
    u.push_back(single("dynkin", [] {
        const auto aut = automorphism_count(build_petersen());
        return result("dynkin.petersen_automorphisms", aut == 120, std::to_string(aut) + " automorphisms");
    }));
    u.push_back({"dynkin", [] {
                     const auto g = build_type_vii_graph();
                     const auto types = group_types(maximal_parabolics(g));
                     const std::set<std::string> expected{"A~8", "A~4+A~4", "A~5+A~2+A~1", "A~7+A~1"};
                     std::set<std::string> found;
                     for (const auto& [t, n] : types) found.insert(t);
                     const auto v = vinberg_check(g);
                     bool classes = true;
                     std::size_t checked = 0;
                     for (const auto& p : maximal_parabolics(g)) {
                         for (const auto& c : p.components) {
                             const auto iso = isotropic_class(g, c.vertices);
                             classes = classes && !iso.empty();
                             ++checked;
                         }
                     }
                     return std::vector<CheckResult>{
                         result("dynkin.type_vii_maximal", found == expected && maximal_parabolics(g).front().rank() == 8,
                                "rank-8 types " + describe(types)),
                         result("dynkin.type_vii_vinberg", v.criterion_holds && v.finite_index,
                                std::to_string(v.witnesses.size()) + " connected parabolics, each extends to rank 8; Gram rank " +
                                    std::to_string(v.gram_rank)),
                         result("dynkin.type_vii_isotropic_classes", classes,
                                std::to_string(checked) + " components with primitive isotropic classes")};
                 }});
    u.push_back({"dynkin", [] {
                     const auto g = build_e10_graph();
                     const auto types = group_types(maximal_parabolics(g));
                     const auto v = vinberg_check(g);
                     return std::vector<CheckResult>{
                         result("dynkin.e10_maximal", types.size() == 1 && types.begin()->first == "E~8", "maximal types " + describe(types)),
                         result("dynkin.e10_vinberg", v.criterion_holds && v.finite_index,
                                std::to_string(v.witnesses.size()) + " connected parabolic, Gram rank " + std::to_string(v.gram_rank))};
                 }});
    u.push_back(single("dynkin", [] {
        const auto v = vinberg_check(build_cycle_with_pendant(6));
        const bool ok = !v.criterion_holds && v.counterexample.has_value();
        return result("dynkin.vinberg_counterexample", ok,
                      std::string("6-cycle with a pendant vertex: ") +
                          (v.counterexample ? v.counterexample->type.to_string() + " does not extend to rank 8" : "no counterexample"));
    }));
    u.push_back(single("dynkin", [] {
        // The exact recognizer agrees with the enumeration on every connected parabolic.
        const auto g = build_type_vii_graph();
        const auto cps = connected_parabolics(g);
        std::map<std::string, std::size_t> counts;
        bool ok = !cps.empty();
        for (const auto& c : cps) {
            ++counts[c.type.to_string()];
            const auto again = recognize_connected_parabolic(g, c.vertices);
            ok = ok && again && *again == c.type;
        }
        return result("dynkin.type_vii_connected_parabolics", ok, "connected parabolics " + describe(counts));
    }));
    return u;
}

// ---------------------------------------------------------------- rules

std::vector<CheckUnit> rules_units() {
    using namespace rules;
    std::vector<CheckUnit> u;
    u.push_back({"enriques_rules", [] {
                     const auto facts = builtin_facts("factsVII");
                     std::vector<std::string> fs;
                     for (const auto& f : facts.fibrations) fs.push_back(f.to_string());
                     const auto v = classify_traced(facts);
                     ClassSet expected = ClassSet::none();
                     expected.insert(EnriquesClass::classical);
                     expected.insert(EnriquesClass::supersingular);
                     bool traced = false;
                     for (const auto& e : v.exclusions) {
                         if (e.removed == EnriquesClass::singular && facts.fibrations[e.fibration].to_string() == "(I6, IV[m], I2)")
                             traced = true;
                     }
                     std::vector<std::string> ex;
                     for (const auto& e : v.exclusions)
                         ex.push_back(to_string(e.removed) + " by " + facts.fibrations[e.fibration].to_string());
                     return std::vector<CheckResult>{
                         result("enriques_rules.type_vii_facts", facts.fibrations.size() == 4, "fibrations " + join(fs, " ")),
                         result("enriques_rules.type_vii_verdict", v.classes == expected, "classes " + v.classes.to_string()),
                         result("enriques_rules.singular_excluded_by_I6_IV_I2", traced, join(ex, "; "))};
                 }});
    u.push_back({"enriques_rules", [] {
                     // Expected cells (singular, classical, supersingular): o exists, x does not.
                     const std::map<std::string, std::string> expected{{"I", "oxx"},  {"II", "oxx"}, {"III", "xxx"}, {"IV", "xxx"},
                                                                       {"V", "xxx"},  {"VI", "oxx"}, {"VII", "xoo"}};
                     std::vector<CheckResult> out;
                     for (const auto& col : table1_report()) {
                         std::string cells;
                         for (const auto c : col.cells) cells += c == Cell::exists_by_construction ? 'o' : 'x';
                         const auto prov = col.facts.provenance == "computed" ? Provenance::computed : Provenance::paper_stated;
                         std::string details = "cells " + cells + " (singular, classical, supersingular); classes " +
                                               col.verdict.classes.to_string();
                         if (!col.construction_checks.empty()) details += "; existence: " + join(col.construction_checks);
                         out.push_back(result("enriques_rules.table1." + col.type, expected.at(col.type) == cells, details, prov));
                     }
                     return out;
                 }});
    u.push_back(single("enriques_rules", [] {
        const auto sens = drop_one_sensitivity(builtin_facts("factsVII"));
        const auto full = classify(builtin_facts("factsVII"));
        bool stable = true;
        std::vector<std::string> parts;
        for (const auto& s : sens) {
            stable = stable && s == full;
            parts.push_back(s.to_string());
        }
        return result("enriques_rules.type_vii_drop_one", stable, "dropping one fibration at a time: " + join(parts, " "));
    }));
    return u;
}

// ---------------------------------------------------------------- constructions

std::vector<CheckUnit> construction_units() {
    std::vector<CheckUnit> u;
    for (const auto& name : constructions::case_names()) {
        u.push_back({"constructions", [name] {
                         std::vector<CheckResult> out;
                         for (const auto& r : constructions::verify_case(name)) {
                             std::string details = r.details;
                             if (r.residual != "0")
                                 details += std::string(r.status == Status::fail ? "; residual: " : "; result: ") + r.residual;
                             out.push_back({r.id, r.status, details, Provenance::computed});
                         }
                         return out;
                     }});
    }
    return u;
}

}  // namespace

std::vector<std::string> module_names() {
    return {"algebra", "weierstrass", "derivations", "curve_config", "dynkin", "enriques_rules", "constructions"};
}

std::vector<CheckUnit> all_units() {
    std::vector<CheckUnit> out;
    for (auto part : {algebra_units(), weierstrass_units(), derivation_units(), config_units(), dynkin_units(), rules_units(),
                      construction_units()}) {
        for (auto& x : part) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace enriques::report
