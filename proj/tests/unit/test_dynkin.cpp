#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "enriques/config/curve_config.hpp"
#include "enriques/dynkin/parabolic.hpp"
#include "enriques/errors.hpp"
#include "oracles.hpp"

using namespace enriques;
using namespace enriques::dynkin;

namespace {

std::vector<std::size_t> indices(const DualGraph& g, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(g.index_of(n));
    return out;
}

std::vector<std::size_t> bits(std::uint64_t m) {
    std::vector<std::size_t> out;
    for (; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

std::uint64_t mask(const std::vector<std::size_t>& v) {
    std::uint64_t m = 0;
    for (const auto x : v) m |= std::uint64_t{1} << x;
    return m;
}

std::set<std::string> type_strings(const std::vector<ParabolicSubdiagram>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.type_string());
    return out;
}

std::vector<std::vector<long>> negated_gram(const DualGraph& g, const std::vector<std::size_t>& s) {
    std::vector<std::vector<long>> m(s.size(), std::vector<long>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = i == j ? 2 : -g.mult(s[i], s[j]);
    }
    return m;
}

}  // namespace

TEST_SUITE("dynkin") {

TEST_CASE("graph builders") {
    const auto p = build_petersen();
    CHECK(p.size() == 10);
    CHECK(p.edge_count() == 15);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.degree(i) == 3);
    CHECK(automorphism_count(p) == 120);

    const auto l = line_graph(p);
    CHECK(l.size() == 15);
    // Handshake: each edge of a 3-regular graph meets 2 * (3 - 1) others.
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(l.degree(i) == 4);
    CHECK(l.edge_count() == 30);

    const auto vii = build_type_vii_graph();
    CHECK(vii.size() == 20);
    CHECK(vii.edge_count() == 55);
    for (int a = 1; a <= 5; ++a) {
        for (int b = a + 1; b <= 5; ++b)
            CHECK(vii.mult(vii.index_of("K" + std::to_string(a)), vii.index_of("K" + std::to_string(b))) == 2);
    }
    CHECK(automorphism_count(vii) == 120);

    const auto e10 = build_e10_graph();
    CHECK(e10.size() == 10);
    CHECK(e10.edge_count() == 9);
    CHECK(e10.degree(e10.index_of("E3")) == 3);

    CHECK_THROWS_AS(DualGraph({"a", "b"}, {{"a", "b", 3}}), TripleEdge);
    CHECK_THROWS_AS(builtin_graph("nope"), UnknownBuiltin);
    CHECK(automorphism_count(build_cycle(7)) == 14);
    CHECK_FALSE(find_isomorphism(build_cycle(6), build_e10_graph()).has_value());
}

TEST_CASE("isomorphisms respect multiplicities") {
    const auto g = build_type_vii_graph();
    // Relabel by reversing the vertex order; the found map must be an isometry.
    std::vector<std::string> names(g.names().rbegin(), g.names().rend());
    std::vector<DualGraph::Edge> edges;
    for (const auto& [a, b, m] : g.edges()) edges.emplace_back(b, a, m);
    const DualGraph h(names, edges);
    const auto phi = find_isomorphism(g, h);
    REQUIRE(phi.has_value());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) CHECK(g.mult(i, j) == h.mult((*phi)[i], (*phi)[j]));
    }
}

TEST_CASE("recognition of connected parabolic sets") {
    const auto c9 = build_cycle(9);
    std::vector<std::size_t> all(9);
    for (std::size_t i = 0; i < 9; ++i) all[i] = i;
    CHECK(recognize_connected_parabolic(c9, all)->to_string() == "A~8");
    CHECK_FALSE(recognize_connected_parabolic(c9, {0, 1, 2, 3}).has_value());
    const DualGraph pair({"a", "b"}, {{"a", "b", 2}});
    CHECK(recognize_connected_parabolic(pair, {0, 1})->to_string() == "A~1");

    const auto e10 = build_e10_graph();
    const auto e8 = indices(e10, {"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E10"});
    CHECK(recognize_connected_parabolic(e10, e8)->to_string() == "E~8");
    CHECK_FALSE(recognize_connected_parabolic(e10, indices(e10, {"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9"})));

    // D~4 and D~5 and E~6, E~7 shapes.
    const DualGraph d4({"c", "a", "b", "d", "e"}, {{"c", "a", 1}, {"c", "b", 1}, {"c", "d", 1}, {"c", "e", 1}});
    CHECK(recognize_connected_parabolic(d4, {0, 1, 2, 3, 4})->to_string() == "D~4");
    const DualGraph d5({"a", "b", "c", "d", "e", "f"}, {{"a", "c", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "e", 1}, {"d", "f", 1}});
    CHECK(recognize_connected_parabolic(d5, {0, 1, 2, 3, 4, 5})->to_string() == "D~5");
    const DualGraph e6({"c", "a1", "a2", "b1", "b2", "d1", "d2"},
                       {{"c", "a1", 1}, {"a1", "a2", 1}, {"c", "b1", 1}, {"b1", "b2", 1}, {"c", "d1", 1}, {"d1", "d2", 1}});
    CHECK(recognize_connected_parabolic(e6, {0, 1, 2, 3, 4, 5, 6})->to_string() == "E~6");
    const DualGraph e7({"c", "a", "b1", "b2", "b3", "d1", "d2", "d3"},
                       {{"c", "a", 1}, {"c", "b1", 1}, {"b1", "b2", 1}, {"b2", "b3", 1}, {"c", "d1", 1}, {"d1", "d2", 1}, {"d2", "d3", 1}});
    CHECK(recognize_connected_parabolic(e7, {0, 1, 2, 3, 4, 5, 6, 7})->to_string() == "E~7");
    CHECK_THROWS_AS(recognize_connected_parabolic(e7, {1, 2}), InvalidParameter);
}

TEST_CASE("enumeration agrees with a brute-force semidefinite oracle") {
    for (const auto& name : builtin_graph_names()) {
        const auto g = builtin_graph(name);
        std::vector<std::uint64_t> adj;
        for (std::size_t v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
        std::set<std::uint64_t> expected;
        const auto subsets = oracle::connected_subsets(adj, 10);
        for (const auto s : subsets) {
            const auto in = oracle::inertia_small(negated_gram(g, bits(s)));
            if (in[1] == 0 && in[2] == 1) expected.insert(s);
        }
        std::set<std::uint64_t> found;
        for (const auto& c : connected_parabolics(g)) found.insert(mask(c.vertices));
        CHECK_MESSAGE(found == expected, name);
        // The exact rational test agrees on every oracle-parabolic set and on
        // a deterministic sample of the others.
        std::size_t k = 0;
        for (const auto s : subsets) {
            const bool oracle_says = expected.count(s) != 0;
            if (!oracle_says && (k++ % 97) != 0) continue;
            CHECK(recognize_connected_parabolic(g, bits(s)).has_value() == oracle_says);
        }
    }
}

TEST_CASE("maximal parabolic subdiagrams") {
    const auto vii = build_type_vii_graph();
    const auto maximal = maximal_parabolics(vii);
    CHECK(type_strings(maximal) == std::set<std::string>{"A~8", "A~4+A~4", "A~5+A~2+A~1", "A~7+A~1"});
    for (const auto& p : maximal) CHECK(p.rank() == 8);
    // Every inclusion-maximal one already has rank 8.
    for (const auto& p : inclusion_maximal_parabolics(vii)) CHECK(p.rank() == 8);

    CHECK(type_strings(maximal_parabolics(build_e10_graph())) == std::set<std::string>{"E~8"});
    const auto c5 = maximal_parabolics(build_cycle(5));
    CHECK(type_strings(c5) == std::set<std::string>{"A~4"});
    CHECK(c5.front().rank() == 4);
}

TEST_CASE("Vinberg criterion") {
    const auto vii = vinberg_check(build_type_vii_graph());
    CHECK(vii.criterion_holds);
    CHECK(vii.nondegenerate);
    CHECK(vii.finite_index);
    CHECK(vii.gram_rank == 10);
    // Every connected parabolic is a component of one of the four maximal types.
    const std::set<std::string> four{"A~8", "A~4+A~4", "A~5+A~2+A~1", "A~7+A~1"};
    for (const auto& w : vii.witnesses) {
        REQUIRE(w.extension.has_value());
        CHECK(four.count(w.extension->type_string()) == 1);
    }

    const auto e10 = vinberg_check(build_e10_graph());
    CHECK(e10.finite_index);
    CHECK(e10.witnesses.size() == 1);

    const auto bad = vinberg_check(build_cycle_with_pendant(6));
    CHECK_FALSE(bad.criterion_holds);
    CHECK_FALSE(bad.finite_index);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->type.to_string() == "A~5");

    // Two disjoint double-edge triangles: each contributes a positive direction.
    const DualGraph hyper({"a", "b", "c", "d", "e", "f"},
                          {{"a", "b", 2}, {"b", "c", 2}, {"a", "c", 2}, {"d", "e", 2}, {"e", "f", 2}, {"d", "f", 2}});
    CHECK_THROWS_AS(vinberg_check(hyper), DegenerateGraph);
}

TEST_CASE("isotropic classes") {
    const DualGraph pair({"a", "b"}, {{"a", "b", 2}});
    CHECK(isotropic_class(pair, {0, 1}) == std::vector<long>{1, 1});
    CHECK(isotropic_class(build_cycle(5), {0, 1, 2, 3, 4}) == std::vector<long>(5, 1));
    const auto e10 = build_e10_graph();
    // Arm order: long arm from the affine node, branch node, short arms.
    const auto arm = indices(e10, {"E8", "E7", "E6", "E5", "E4", "E3", "E2", "E1", "E10"});
    auto sorted = arm;
    std::sort(sorted.begin(), sorted.end());
    const auto marks = isotropic_class(e10, sorted);
    std::vector<long> in_arm_order;
    for (const auto v : arm) in_arm_order.push_back(marks[static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), v) - sorted.begin())]);
    CHECK(in_arm_order == std::vector<long>{1, 2, 3, 4, 5, 6, 4, 2, 3});
    CHECK_THROWS_AS(isotropic_class(e10, indices(e10, {"E1", "E2"})), NotParabolic);

    // Property: kernel, primitive, positive on every connected parabolic.
    for (const auto& name : builtin_graph_names()) {
        const auto g = builtin_graph(name);
        for (const auto& c : connected_parabolics(g)) {
            const auto v = isotropic_class(g, c.vertices);
            long gcd = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                CHECK(v[i] > 0);
                gcd = std::gcd(gcd, v[i]);
                long row = -2 * v[i];
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (j != i) row += g.mult(c.vertices[i], c.vertices[j]) * v[j];
                }
                CHECK(row == 0);
            }
            CHECK(gcd == 1);
        }
    }
}

TEST_CASE("forced multiple fibers") {
    const auto vii = build_type_vii_graph();
    std::map<std::string, std::set<std::vector<bool>>> flags;
    for (const auto& p : maximal_parabolics(vii)) {
        std::vector<bool> f;
        for (std::size_t c = 0; c < p.components.size(); ++c) f.push_back(multiple_fiber_test(vii, p, c));
        flags[p.type_string()].insert(f);
    }
    // The A~2 of A~5+A~2+A~1 always meets an outside curve oddly.
    for (const auto& f : flags["A~5+A~2+A~1"]) CHECK(f[1]);
    CHECK(flags["A~4+A~4"] == std::set<std::vector<bool>>{{false, false}});
    // The A~1 of A~7+A~1 (a III fiber) is forced multiple, the A~7 is not.
    CHECK(flags["A~7+A~1"] == std::set<std::vector<bool>>{{false, true}});
    CHECK(flags["A~8"] == std::set<std::vector<bool>>{{false}});
    CHECK(flags["A~5+A~2+A~1"] == std::set<std::vector<bool>>{{false, true, false}});

    const auto e10 = build_e10_graph();
    const auto m = maximal_parabolics(e10);
    REQUIRE(m.size() == 1);
    CHECK(multiple_fiber_test(e10, m.front(), 0));
    CHECK_THROWS_AS(multiple_fiber_test(e10, m.front(), 1), NotParabolic);
}

TEST_CASE("Kodaira assignments") {
    auto text = [](const std::vector<std::vector<KodairaType>>& as) {
        std::set<std::string> out;
        for (const auto& a : as) {
            std::string s;
            for (const auto& k : a) s += (s.empty() ? "" : ",") + k.to_string();
            out.insert(s);
        }
        return out;
    };
    auto types = [](const std::vector<std::string>& t) {
        std::vector<AffineType> out;
        for (const auto& s : t) out.push_back(*AffineType::parse(s));
        return out;
    };
    CHECK(text(kodaira_assignments(types({"A~5", "A~2", "A~1"}))) == std::set<std::string>{"I6,IV,I2"});
    CHECK(text(kodaira_assignments(types({"A~7", "A~1"}))) == std::set<std::string>{"I8,III"});
    CHECK(text(kodaira_assignments(types({"A~4", "A~4"}))) == std::set<std::string>{"I5,I5"});
    CHECK(text(kodaira_assignments(types({"A~8"}))) == std::set<std::string>{"I9"});
    CHECK(text(kodaira_assignments(types({"E~8"}))) == std::set<std::string>{"II*"});
    CHECK(text(kodaira_assignments(types({"A~2", "A~2", "A~2", "A~2"}))) == std::set<std::string>{"I3,I3,I3,I3"});
    CHECK(text(kodaira_assignments(types({"E~6", "A~2"}))) == std::set<std::string>{"IV*,I3", "IV*,IV"});
    CHECK(kodaira_assignments(types({"A~4"})).empty());
    CHECK(kodaira_catalogue().size() == 11);
    CHECK_FALSE(AffineType::parse("E~9").has_value());
    CHECK_FALSE(AffineType::parse("D~3").has_value());
}

TEST_CASE("the quotient configuration is the type VII graph") {
    const auto x20 = config::quotient_blowdown_gram(config::build_Y_config(), config::integral_set_D());
    const auto g = DualGraph::from_config(x20);
    const auto vii = build_type_vii_graph();
    REQUIRE(find_isomorphism(g, vii).has_value());
    CHECK(automorphism_count(g) == 120);
}

}  // TEST_SUITE
