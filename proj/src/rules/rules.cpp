#include "enriques/rules/rules.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

#include "enriques/errors.hpp"
#include "../common/json_parse.hpp"

namespace enriques::rules {

using weierstrass::KodairaType;

std::string to_string(EnriquesClass c) {
    switch (c) {
        case EnriquesClass::classical: return "classical";
        case EnriquesClass::singular: return "singular";
        case EnriquesClass::supersingular: return "supersingular";
    }
    return "?";
}

std::vector<EnriquesClass> ClassSet::members() const {
    std::vector<EnriquesClass> out;
    for (const auto c : {EnriquesClass::classical, EnriquesClass::singular, EnriquesClass::supersingular}) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

std::string ClassSet::to_string() const {
    std::string s;
    for (const auto c : members()) s += (s.empty() ? "" : ", ") + rules::to_string(c);
    return "{" + s + "}";
}

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::multiplicative: return "multiplicative";
        case ReductionKind::additive: return "additive";
        case ReductionKind::unknown: return "unknown";
    }
    return "?";
}

ReductionKind FiberFact::reduction() const {
    if (label == "In") return ReductionKind::multiplicative;
    if (const auto k = KodairaType::try_parse(label)) {
        if (!k->is_reducible()) throw MalformedFacts("fiber " + label + " is not reducible");
        return k->is_additive() ? ReductionKind::additive : ReductionKind::multiplicative;
    }
    if (const auto a = dynkin::AffineType::parse(label)) {
        // A~1 and A~2 may be I2/III and I3/IV.
        if (a->family == 'A') return a->n <= 2 ? ReductionKind::unknown : ReductionKind::multiplicative;
        return ReductionKind::additive;
    }
    throw MalformedFacts("unknown fiber label: " + label);
}

int Fibration::forced_multiple_count() const noexcept {
    const int flagged = static_cast<int>(std::count_if(fibers.begin(), fibers.end(), [](const FiberFact& f) { return f.multiple; }));
    return std::max(flagged, min_multiple);
}

std::string Fibration::to_string() const {
    std::string s;
    for (const auto& f : fibers) s += (s.empty() ? "" : ", ") + f.label + (f.multiple ? "[m]" : "");
    s = "(" + s + ")";
    if (min_multiple > 0) s += " with at least " + std::to_string(min_multiple) + " multiple";
    return s;
}

void validate(const Fibration& f) {
    if (f.fibers.empty()) throw MalformedFacts("fibration without fibers");
    for (const auto& fiber : f.fibers) (void)fiber.reduction();
    if (f.min_multiple < 0 || f.min_multiple > static_cast<int>(f.fibers.size()))
        throw MalformedFacts("min_multiple out of range in " + f.to_string());
}

namespace {

std::vector<std::pair<EnriquesClass, std::string>> removals(const Fibration& f) {
    validate(f);
    std::vector<std::pair<EnriquesClass, std::string>> out;
    for (const auto& fiber : f.fibers) {
        if (!fiber.multiple) continue;
        const auto kind = fiber.reduction();
        if (kind == ReductionKind::additive) {
            out.emplace_back(EnriquesClass::singular, "multiple fiber " + fiber.label + " is additive");
        } else if (kind == ReductionKind::multiplicative) {
            out.emplace_back(EnriquesClass::classical, "multiple fiber " + fiber.label + " is multiplicative");
            out.emplace_back(EnriquesClass::supersingular, "multiple fiber " + fiber.label + " is multiplicative");
        }
    }
    if (f.forced_multiple_count() >= 2) {
        const std::string why = std::to_string(f.forced_multiple_count()) + " multiple fibers in one fibration";
        out.emplace_back(EnriquesClass::singular, why);
        out.emplace_back(EnriquesClass::supersingular, why);
    }
    return out;
}

}  // namespace

ClassSet admissible_classes_for_fibration(const Fibration& f) {
    ClassSet s = ClassSet::all();
    for (const auto& [c, why] : removals(f)) s.remove(c);
    return s;
}

Verdict classify_traced(const FibrationFacts& facts) {
    Verdict v;
    for (std::size_t i = 0; i < facts.fibrations.size(); ++i) {
        for (auto& [c, why] : removals(facts.fibrations[i])) {
            v.classes.remove(c);
            v.exclusions.push_back({i, c, std::move(why)});
        }
    }
    return v;
}

std::vector<ClassSet> drop_one_sensitivity(const FibrationFacts& facts) {
    std::vector<ClassSet> out;
    for (std::size_t i = 0; i < facts.fibrations.size(); ++i) {
        FibrationFacts reduced = facts;
        reduced.fibrations.erase(reduced.fibrations.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(classify(reduced));
    }
    return out;
}

FibrationFacts facts_from_graph(const dynkin::DualGraph& g, const std::string& name) {
    FibrationFacts facts{name, {}, "computed"};
    std::set<std::pair<std::vector<std::string>, std::vector<bool>>> seen;
    for (const auto& p : dynkin::maximal_parabolics(g)) {
        if (p.rank() != 8) break;
        const auto assignments = dynkin::kodaira_assignments(p);
        if (assignments.size() > 1) {
            std::string branches;
            for (const auto& a : assignments) {
                std::string s;
                for (const auto& k : a) s += (s.empty() ? "" : ", ") + k.to_string();
                branches += " (" + s + ")";
            }
            throw AmbiguousAssignment(p.type_string() + " admits several labelings:" + branches);
        }
        std::vector<std::string> labels;
        std::vector<bool> flags;
        for (std::size_t c = 0; c < p.components.size(); ++c) {
            // Without a catalogue entry only the diagram type is known.
            labels.push_back(assignments.empty() ? p.components[c].type.to_string() : assignments.front()[c].to_string());
            flags.push_back(dynkin::multiple_fiber_test(g, p, c));
        }
        if (!seen.emplace(labels, flags).second) continue;
        Fibration f;
        for (std::size_t c = 0; c < labels.size(); ++c) f.fibers.push_back({labels[c], flags[c]});
        facts.fibrations.push_back(std::move(f));
    }
    std::sort(facts.fibrations.begin(), facts.fibrations.end(), [](const Fibration& a, const Fibration& b) {
        if (a.fibers.size() != b.fibers.size()) return a.fibers.size() < b.fibers.size();
        return a.to_string() < b.to_string();
    });
    return facts;
}

namespace {

Fibration single_multiple(const std::string& label) { return Fibration{{{label, true}}, 0}; }

Fibration two_multiple(std::vector<std::string> labels) {
    Fibration f;
    for (auto& l : labels) f.fibers.push_back({std::move(l), false});
    f.min_multiple = 2;
    return f;
}

}  // namespace

FibrationFacts builtin_facts(const std::string& name) {
    if (name == "factsI") return {name, {single_multiple("I8")}, "paper-stated"};
    if (name == "factsII") return {name, {single_multiple("I4")}, "paper-stated"};
    if (name == "factsVI") return {name, {single_multiple("I5")}, "paper-stated"};
    // Two reducible multiple fibers in one fibration, and a multiplicative
    // reducible multiple fiber in another.
    if (name == "factsIII") return {name, {two_multiple({"D~6", "A~1", "A~1"}), single_multiple("In")}, "paper-stated"};
    if (name == "factsIV")
        return {name, {two_multiple({"A~3", "A~3", "A~1", "A~1"}), single_multiple("In")}, "paper-stated"};
    if (name == "factsV") return {name, {two_multiple({"A~5", "A~2", "A~1"}), single_multiple("In")}, "paper-stated"};
    if (name == "factsVII") return facts_from_graph(dynkin::build_type_vii_graph(), name);
    throw UnknownBuiltin("unknown facts: " + name);
}

std::vector<std::string> builtin_facts_names() {
    return {"factsI", "factsII", "factsIII", "factsIV", "factsV", "factsVI", "factsVII"};
}

FibrationFacts facts_from_json(const std::string& text, const std::string& name) {
    const nlohmann::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("fibrations") || !j["fibrations"].is_array())
        throw MalformedFacts("facts JSON needs a \"fibrations\" array");
    FibrationFacts facts{name, {}, j.value("provenance", std::string("paper-stated"))};
    for (const auto& fj : j["fibrations"]) {
        if (!fj.is_object() || !fj.contains("fibers") || !fj["fibers"].is_array())
            throw MalformedFacts("each fibration needs a \"fibers\" array");
        Fibration f;
        for (const auto& l : fj["fibers"]) {
            if (!l.is_string()) throw MalformedFacts("fiber labels must be strings");
            f.fibers.push_back({l.get<std::string>(), false});
        }
        if (fj.contains("multiple")) {
            if (!fj["multiple"].is_array()) throw MalformedFacts("\"multiple\" must be an array");
            for (const auto& l : fj["multiple"]) {
                if (!l.is_string()) throw MalformedFacts("multiple labels must be strings");
                const auto label = l.get<std::string>();
                auto it = std::find_if(f.fibers.begin(), f.fibers.end(),
                                       [&](const FiberFact& x) { return x.label == label && !x.multiple; });
                if (it == f.fibers.end()) throw MalformedFacts("multiple fiber " + label + " is not among the fibers");
                it->multiple = true;
            }
        }
        if (fj.contains("min_multiple")) {
            if (!fj["min_multiple"].is_number_integer()) throw MalformedFacts("\"min_multiple\" must be an integer");
            f.min_multiple = fj["min_multiple"].get<int>();
        }
        validate(f);
        facts.fibrations.push_back(std::move(f));
    }
    return facts;
}

std::string facts_to_json(const FibrationFacts& facts) {
    nlohmann::json j;
    j["name"] = facts.name;
    j["provenance"] = facts.provenance;
    j["fibrations"] = nlohmann::json::array();
    for (const auto& f : facts.fibrations) {
        nlohmann::json fj;
        fj["fibers"] = nlohmann::json::array();
        fj["multiple"] = nlohmann::json::array();
        for (const auto& fiber : f.fibers) {
            fj["fibers"].push_back(fiber.label);
            if (fiber.multiple) fj["multiple"].push_back(fiber.label);
        }
        if (f.min_multiple > 0) fj["min_multiple"] = f.min_multiple;
        j["fibrations"].push_back(fj);
    }
    return j.dump(2);
}

std::string to_string(Cell c) { return c == Cell::exists_by_construction ? "exists_by_construction" : "not_exists"; }

std::vector<Table1Column> table1_report() {
    static const std::map<std::string, std::vector<std::string>> checks = {
        {"I", {"constructions.type_I.branch_avoids_fixed_point", "constructions.type_I.d4_isolated"}},
        {"II", {"constructions.type_II.a3_normal_form", "constructions.type_II.a1_node"}},
        {"VI", {"constructions.type_VI.nodes", "constructions.type_VI.petersen_incidence"}},
        {"VII", {"derivations.D_closure", "dynkin.quotient_is_type_vii"}},
    };
    std::vector<Table1Column> out;
    for (const std::string type : {"I", "II", "III", "IV", "V", "VI", "VII"}) {
        Table1Column col;
        col.type = type;
        col.facts = builtin_facts("facts" + type);
        col.verdict = classify_traced(col.facts);
        for (std::size_t r = 0; r < 3; ++r)
            col.cells[r] = col.verdict.classes.contains(kAllClasses[r]) ? Cell::exists_by_construction : Cell::not_exists;
        if (const auto it = checks.find(type); it != checks.end() && !col.verdict.classes.empty())
            col.construction_checks = it->second;
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace enriques::rules
