#include <set>

#include "doctest.h"
#include "enriques/errors.hpp"
#include "enriques/rules/rules.hpp"

using namespace enriques;
using namespace enriques::rules;

namespace {

ClassSet set_of(std::initializer_list<EnriquesClass> cs) {
    ClassSet s = ClassSet::none();
    for (const auto c : cs) s.insert(c);
    return s;
}

constexpr auto C = EnriquesClass::classical;
constexpr auto S = EnriquesClass::singular;
constexpr auto SS = EnriquesClass::supersingular;

std::vector<std::string> labels(const Fibration& f) {
    std::vector<std::string> out;
    for (const auto& x : f.fibers) out.push_back(x.label + (x.multiple ? "*m" : ""));
    return out;
}

}  // namespace

TEST_SUITE("enriques_rules") {

TEST_CASE("per-fibration exclusion rules") {
    CHECK(admissible_classes_for_fibration({{{"IV", true}}, 0}) == set_of({C, SS}));
    CHECK(admissible_classes_for_fibration({{{"I8", true}}, 0}) == set_of({S}));
    CHECK(admissible_classes_for_fibration({{{"I2*", true}, {"III", true}}, 0}) == set_of({C}));
    CHECK(admissible_classes_for_fibration({{{"I9", false}}, 0}) == ClassSet::all());
    CHECK(admissible_classes_for_fibration({{{"A~1", false}, {"A~1", false}}, 2}) == set_of({C}));
    // An A~1 of unknown reduction kind excludes nothing on its own.
    CHECK(admissible_classes_for_fibration({{{"A~1", true}}, 0}) == ClassSet::all());
    CHECK_THROWS_AS(admissible_classes_for_fibration({{{"I1", true}}, 0}), MalformedFacts);
    CHECK_THROWS_AS(admissible_classes_for_fibration({{{"X7", true}}, 0}), MalformedFacts);
    CHECK_THROWS_AS(admissible_classes_for_fibration({{{"I3", false}}, 2}), MalformedFacts);
    CHECK_THROWS_AS(admissible_classes_for_fibration({{}, 0}), MalformedFacts);
    CHECK(ClassSet::none().to_string() == "{}");
    CHECK(set_of({SS, C}).to_string() == "{classical, supersingular}");
}

TEST_CASE("type VII facts come from the graph") {
    const auto facts = builtin_facts("factsVII");
    CHECK(facts.provenance == "computed");
    REQUIRE(facts.fibrations.size() == 4);
    std::set<std::vector<std::string>> got;
    for (const auto& f : facts.fibrations) got.insert(labels(f));
    CHECK(got == std::set<std::vector<std::string>>{{"I9"}, {"I5", "I5"}, {"I6", "IV*m", "I2"}, {"I8", "III*m"}});
    CHECK(classify(facts) == set_of({C, SS}));
}

TEST_CASE("classification is an intersection") {
    for (const auto& name : builtin_facts_names()) {
        const auto facts = builtin_facts(name);
        const auto verdict = classify(facts);
        for (const auto& f : facts.fibrations) CHECK(verdict.subset_of(admissible_classes_for_fibration(f)));
    }
    CHECK(classify(builtin_facts("factsIII")).empty());
    CHECK(classify(builtin_facts("factsIV")).empty());
    CHECK(classify(builtin_facts("factsV")).empty());
    CHECK(classify(builtin_facts("factsVI")) == set_of({S}));
    CHECK(classify(builtin_facts("factsI")) == set_of({S}));
    CHECK(builtin_facts("factsI").provenance == "paper-stated");
    CHECK_THROWS_AS(builtin_facts("factsVIII"), UnknownBuiltin);
}

TEST_CASE("the singular exclusion on type VII is traced to its fibrations") {
    const auto facts = builtin_facts("factsVII");
    const auto v = classify_traced(facts);
    std::set<std::string> excluders;
    for (const auto& e : v.exclusions) {
        if (e.removed == S) excluders.insert(facts.fibrations[e.fibration].to_string());
    }
    CHECK(excluders.count("(I6, IV[m], I2)") == 1);
    // The III of (I8, III) is forced multiple too, so the verdict survives
    // dropping any single fibration.
    CHECK(excluders.count("(I8, III[m])") == 1);
    for (const auto& s : drop_one_sensitivity(facts)) CHECK(s == set_of({C, SS}));
    // Dropping both carriers readmits singular.
    FibrationFacts reduced = facts;
    std::erase_if(reduced.fibrations, [](const Fibration& f) { return f.forced_multiple_count() > 0; });
    CHECK(classify(reduced) == ClassSet::all());
}

TEST_CASE("facts JSON round trip") {
    const auto facts = facts_from_json(R"({"fibrations": [{"fibers": ["I6","IV","I2"], "multiple": ["IV"]},
                                                         {"fibers": ["D~6","A~1","A~1"], "min_multiple": 2}]})");
    REQUIRE(facts.fibrations.size() == 2);
    CHECK(facts.fibrations[0].fibers[1].multiple);
    CHECK(facts.fibrations[1].min_multiple == 2);
    CHECK(classify(facts) == set_of({C}));
    const auto again = facts_from_json(facts_to_json(facts));
    CHECK(facts_to_json(again) == facts_to_json(facts));
    CHECK_THROWS_AS(facts_from_json("{"), ParseError);
    CHECK_THROWS_AS(facts_from_json(R"({"fibrations": [{"fibers": ["I6"], "multiple": ["IV"]}]})"), MalformedFacts);
    CHECK_THROWS_AS(facts_from_json(R"({"fibrations": [{"fibers": ["Q"]}]})"), MalformedFacts);
}

TEST_CASE("facts from other graphs") {
    const auto e10 = facts_from_graph(dynkin::build_e10_graph());
    REQUIRE(e10.fibrations.size() == 1);
    CHECK(labels(e10.fibrations[0]) == std::vector<std::string>{"II**m"});
    CHECK(facts_from_graph(dynkin::build_cycle(5)).fibrations.empty());
}

TEST_CASE("existence table") {
    const auto table = table1_report();
    REQUIRE(table.size() == 7);
    // Rows singular, classical, supersingular; 'o' exists, 'x' does not.
    const std::vector<std::string> expected = {"oxx", "oxx", "xxx", "xxx", "xxx", "oxx", "xoo"};
    for (std::size_t c = 0; c < 7; ++c) {
        std::string got;
        for (const auto cell : table[c].cells) got += cell == Cell::exists_by_construction ? 'o' : 'x';
        CHECK_MESSAGE(got == expected[c], table[c].type);
        CHECK(table[c].construction_checks.empty() == (expected[c] == "xxx"));
    }
}

}  // TEST_SUITE
