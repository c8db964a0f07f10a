#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enriques/constructions/constructions.hpp"
#include "enriques/dynkin/parabolic.hpp"
#include "enriques/errors.hpp"
#include "enriques/report/io.hpp"
#include "enriques/report/report.hpp"

using namespace enriques;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInternal = 2;
constexpr int kExitParse = 3;
constexpr int kExitUnknown = 4;

struct Output {
    std::string format = "json";
    std::string out;
    unsigned jobs = 0;
};

void add_output_flags(CLI::App* cmd, Output& o, bool jobs = false) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    cmd->add_option("--out", o.out, "Write the output to a file instead of stdout");
    if (jobs) cmd->add_option("--jobs", o.jobs, "Worker threads (default: number of logical processors)");
}

void emit(const Output& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InvalidParameter("cannot write " + o.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string md_escape(const std::string& s) {
    std::string out;
    for (const char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
    return out;
}

// ---------------------------------------------------------------- fibration

int cmd_fibration(const std::string& source, const Output& o) {
    using namespace weierstrass;
    const auto c = io::resolve_curve(source);
    const auto inv = invariants(c);
    json j;
    j["curve"] = c.to_string();
    j["field"] = "GF(" + std::to_string(c.field().size()) + ")";
    j["discriminant"] = inv.delta.to_string();
    j["j"] = inv.j.to_string();
    std::ostringstream md;
    md << "# " << source << "\n\n" << c.to_string() << " over GF(" << c.field().size() << ")"
       << (c.base() ? "(" + algebra::var_name(*c.base()) + ")" : "") << "\n\n- discriminant: " << inv.delta.to_string()
       << "\n- j: " << inv.j.to_string() << "\n\n";
    if (c.base()) {
        j["base"] = algebra::var_name(*c.base());
        const auto reports = place_analysis(c, {c.field().size() == 2});
        j["fibers"] = json::array();
        md << "| place | v(delta) | v(j) | reduction | type | count |\n|---|---|---|---|---|---|\n";
        for (const auto& r : reports) {
            json f{{"place", r.place.to_string()},
                   {"v_delta", r.v_delta},
                   {"reduction", to_string(r.reduction)},
                   {"count", r.geometric_count}};
            f["v_j"] = r.v_j ? json(*r.v_j) : json(nullptr);
            f["kodaira"] = r.kodaira ? json(r.kodaira->to_string()) : json(nullptr);
            j["fibers"].push_back(f);
            md << "| " << r.place.to_string() << " | " << r.v_delta << " | " << (r.v_j ? std::to_string(*r.v_j) : "-") << " | "
               << to_string(r.reduction) << " | " << (r.kodaira ? r.kodaira->to_string() : "-") << " | " << r.geometric_count
               << " |\n";
        }
        j["geometric_fibers"] = json::array();
        std::vector<std::string> labels;
        for (const auto& k : geometric_fibers(reports)) {
            j["geometric_fibers"].push_back(k.to_string());
            labels.push_back(k.to_string());
        }
        md << "\nreducible fibers:";
        for (const auto& l : labels) md << ' ' << l;
        md << '\n';
    } else {
        j["base"] = "none";
        j["points"] = json::array();
        md << "points:";
        for (const auto& p : rational_points(c)) {
            j["points"].push_back(p.to_string());
            md << ' ' << p.to_string();
        }
        md << '\n';
    }
    emit(o, o.format == "json" ? dump(j) : md.str());
    return kExitOk;
}

// ---------------------------------------------------------------- derivation

int cmd_derivation(const std::string& source, const Output& o) {
    using namespace derivations;
    const auto d = io::resolve_derivation(source);
    json j;
    j["coeff_t"] = d.coeff_t().to_string();
    j["coeff_x"] = d.coeff_x().to_string();
    j["param"] = d.context().to_string();
    const auto h = p_closure_multiplier(d);
    j["p_closure_multiplier"] = h ? json(h->to_string()) : json(nullptr);
    j["type"] = h ? to_string(vector_field_type(d)) : std::string("not p-closed");
    const auto fib = integral_fiber_places(d);
    json fj;
    fj["all"] = fib.all;
    fj["rational"] = json::array();
    for (const auto& l : fib.rational) fj["rational"].push_back({{"t", l.root.to_string()}, {"multiplicity", l.multiplicity}});
    fj["other"] = json::array();
    for (const auto& [p, m] : fib.other) fj["other"].push_back({{"factor", p.to_string()}, {"multiplicity", m}});
    j["integral_fibers"] = fj;
    std::ostringstream md;
    md << "# " << source << "\n\n- D = (" << j["coeff_t"].get<std::string>() << ") d/dt + (" << j["coeff_x"].get<std::string>()
       << ") d/dx\n- parameters: " << d.context().to_string() << "\n- D^2 = "
       << (h ? "(" + h->to_string() + ") D" : std::string("not a multiple of D")) << "\n- type: " << j["type"].get<std::string>()
       << "\n- integral fibers:";
    if (fib.all) md << " every fiber";
    for (const auto& l : fib.rational) md << " t = " << l.root.to_string() << " (" << l.multiplicity << ")";
    for (const auto& [p, m] : fib.other) md << ' ' << p.to_string() << " = 0 (" << m << ")";
    md << '\n';
    emit(o, o.format == "json" ? dump(j) : md.str());
    return kExitOk;
}

// ---------------------------------------------------------------- graph

std::vector<std::string> vertex_names(const dynkin::DualGraph& g, const std::vector<std::size_t>& vs) {
    std::vector<std::string> out;
    for (const auto v : vs) out.push_back(g.names()[v]);
    return out;
}

std::vector<std::string> parabolic_names(const dynkin::DualGraph& g, const dynkin::ParabolicSubdiagram& p) {
    std::vector<std::string> out;
    for (const auto& c : p.components) {
        for (const auto& n : vertex_names(g, c.vertices)) out.push_back(n);
    }
    return out;
}

int cmd_graph(const std::string& source, bool vinberg, bool maximal, bool isotropic, const Output& o) {
    using namespace dynkin;
    const auto g = io::resolve_graph(source);
    json j;
    j["graph"] = source;
    j["vertices"] = g.size();
    j["edges"] = g.edge_count();
    std::ostringstream md;
    md << "# " << source << "\n\n" << g.size() << " vertices, " << g.edge_count() << " edges\n";
    std::vector<ParabolicSubdiagram> maxes;
    if (maximal || isotropic) maxes = maximal_parabolics(g);
    if (maximal) {
        std::map<std::string, std::vector<const ParabolicSubdiagram*>> by_type;
        for (const auto& p : maxes) by_type[p.type_string()].push_back(&p);
        j["maximal"] = json::array();
        md << "\n## Maximal parabolic subdiagrams\n\n| type | rank | instances | example |\n|---|---|---|---|\n";
        for (const auto& [type, ps] : by_type) {
            const auto example = parabolic_names(g, *ps.front());
            j["maximal"].push_back({{"type", type}, {"rank", ps.front()->rank()}, {"instances", ps.size()}, {"example", example}});
            std::string ex;
            for (const auto& n : example) ex += (ex.empty() ? "" : " ") + n;
            md << "| " << type << " | " << ps.front()->rank() << " | " << ps.size() << " | " << ex << " |\n";
        }
    }
    if (isotropic) {
        std::map<std::string, const ParabolicSubdiagram*> first;
        for (const auto& p : maxes) first.emplace(p.type_string(), &p);
        j["isotropic"] = json::array();
        md << "\n## Isotropic classes\n\n";
        for (const auto& [type, p] : first) {
            json entry{{"type", type}, {"components", json::array()}};
            md << "- " << type << ":";
            for (std::size_t c = 0; c < p->components.size(); ++c) {
                const auto& comp = p->components[c];
                const auto cls = isotropic_class(g, comp.vertices);
                const bool mult = multiple_fiber_test(g, *p, c);
                json cj{{"type", comp.type.to_string()}, {"multiple", mult}, {"class", json::object()}};
                md << ' ' << comp.type.to_string() << (mult ? " [forced multiple]" : "") << " (";
                for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
                    cj["class"][g.names()[comp.vertices[i]]] = cls[i];
                    md << (i ? " + " : "") << cls[i] << ' ' << g.names()[comp.vertices[i]];
                }
                md << ')';
                entry["components"].push_back(cj);
            }
            md << '\n';
            j["isotropic"].push_back(entry);
        }
    }
    if (vinberg) {
        const auto v = vinberg_check(g);
        json vj{{"criterion_holds", v.criterion_holds},
                {"nondegenerate", v.nondegenerate},
                {"finite_index", v.finite_index},
                {"gram_rank", v.gram_rank},
                {"connected_parabolics", v.witnesses.size()}};
        vj["counterexample"] = v.counterexample
                                   ? json{{"type", v.counterexample->type.to_string()}, {"vertices", vertex_names(g, v.counterexample->vertices)}}
                                   : json(nullptr);
        j["vinberg"] = vj;
        md << "\n## Vinberg criterion\n\n- every connected parabolic extends to rank 8: " << (v.criterion_holds ? "yes" : "no")
           << "\n- non-degenerate: " << (v.nondegenerate ? "yes" : "no") << "\n- finite index: " << (v.finite_index ? "yes" : "no")
           << "\n- Gram rank: " << v.gram_rank << "\n- connected parabolics: " << v.witnesses.size() << '\n';
        if (v.counterexample) md << "- counterexample: " << v.counterexample->type.to_string() << '\n';
    }
    emit(o, o.format == "json" ? dump(j) : md.str());
    return kExitOk;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& source, const Output& o) {
    using namespace rules;
    const auto facts = io::resolve_facts(source);
    const auto v = classify_traced(facts);
    const std::string verdict = v.classes.empty() ? "none (non-existent)" : v.classes.to_string();
    json j;
    j["facts"] = facts.name;
    j["provenance"] = facts.provenance;
    j["fibrations"] = json::array();
    for (const auto& f : facts.fibrations) j["fibrations"].push_back(f.to_string());
    j["classes"] = json::array();
    for (const auto c : v.classes.members()) j["classes"].push_back(to_string(c));
    j["verdict"] = verdict;
    j["exclusions"] = json::array();
    std::ostringstream md;
    md << "# " << facts.name << " (" << facts.provenance << ")\n\n**Verdict:** " << verdict << "\n\n";
    for (const auto& e : v.exclusions) {
        const auto fib = facts.fibrations[e.fibration].to_string();
        j["exclusions"].push_back({{"fibration", fib}, {"removed", to_string(e.removed)}, {"reason", e.reason}});
        md << "- " << to_string(e.removed) << " excluded by " << fib << ": " << e.reason << '\n';
    }
    emit(o, o.format == "json" ? dump(j) : md.str());
    return kExitOk;
}

// ---------------------------------------------------------------- constructions

int cmd_constructions(const std::string& which, const Output& o) {
    std::vector<std::string> cases{which};
    if (which == "all") cases = constructions::case_names();
    json j;
    j["checks"] = json::array();
    std::ostringstream md;
    md << "| check | status | residual | details |\n|---|---|---|---|\n";
    bool failed = false;
    for (const auto& c : cases) {
        for (const auto& r : constructions::verify_case(c)) {
            failed = failed || r.status == constructions::Status::fail;
            j["checks"].push_back(
                {{"check_id", r.id}, {"status", to_string(r.status)}, {"residual", r.residual}, {"details", r.details}});
            md << "| " << r.id << " | " << to_string(r.status) << " | " << md_escape(r.residual) << " | " << md_escape(r.details)
               << " |\n";
        }
    }
    emit(o, o.format == "json" ? dump(j) : md.str());
    return failed ? kExitFail : kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& what, const std::optional<std::string>& only, const Output& o) {
    if (what != "all") throw UnknownBuiltin("unknown verify target " + what + " (expected \"all\")");
    const auto r = report::verify_all(only, o.jobs);
    emit(o, o.format == "json" ? report::to_json(r) : report::to_markdown(r));
    return r.any_fail() ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for Enriques surfaces in characteristic 2"};
    app.set_version_flag("--version", std::string(report::kToolVersion));
    app.footer(
        "Exit codes: 0 success, 1 a check failed, 2 internal or usage error, 3 parse error, 4 unknown built-in.\n"
        "Sources are built-in names or paths to JSON files.");
    app.require_subcommand(1);

    Output out;
    std::string target = "all", source, which = "all";
    std::optional<std::string> only;
    bool vinberg = false, maximal = false, isotropic = false;

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("target", target, "Only \"all\" is supported")->check(CLI::IsMember({"all"}));
    verify->add_option("--only", only, "Restrict to one module")->check(CLI::IsMember(report::module_names()));
    add_output_flags(verify, out, true);

    auto* fibration = app.add_subcommand("fibration", "Singular fibers of a Weierstrass curve");
    fibration->add_option("curve", source, "Built-in curve (E, R, Ystar, kummerEF) or curve JSON file")->required();
    add_output_flags(fibration, out);

    auto* derivation = app.add_subcommand("derivation", "2-closure and integral fibers of a derivation");
    derivation->add_option("derivation", source, "Built-in derivation (Dprime, D) or derivation JSON file")->required();
    add_output_flags(derivation, out);

    auto* graph = app.add_subcommand("graph", "Parabolic subdiagrams and the Vinberg criterion");
    graph->add_option("graph", source, "Built-in graph (petersen, petersen-line, typeVII, E10) or graph JSON file")->required();
    graph->add_flag("--vinberg", vinberg, "Check the Vinberg criterion");
    graph->add_flag("--maximal", maximal, "List maximal parabolic subdiagrams by type");
    graph->add_flag("--isotropic", isotropic, "Isotropic classes and forced multiple fibers");
    add_output_flags(graph, out);

    auto* classify = app.add_subcommand("classify", "Admissible Enriques classes from fibration facts");
    classify->add_option("facts", source, "Built-in facts (factsI .. factsVII) or facts JSON file")->required();
    add_output_flags(classify, out);

    auto* cons = app.add_subcommand("constructions", "Identity checks of the geometric constructions");
    cons->add_option("case", which, "type_I, type_II, type_VI, kummer, sigma_Y or all");
    add_output_flags(cons, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInternal;
    }

    try {
        if (*verify) return cmd_verify(target, only, out);
        if (*fibration) return cmd_fibration(source, out);
        if (*derivation) return cmd_derivation(source, out);
        if (*graph) return cmd_graph(source, vinberg, maximal, isotropic, out);
        if (*classify) return cmd_classify(source, out);
        if (*cons) return cmd_constructions(which, out);
    } catch (const ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return kExitParse;
    } catch (const UnknownBuiltin& e) {
        std::cerr << "error: UnknownBuiltin: " << e.what() << '\n';
        return kExitUnknown;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
