#include "enriques/report/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../common/json_parse.hpp"
#include "enriques/algebra/parse.hpp"
#include "enriques/errors.hpp"

namespace enriques::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what, 1, 1); }

std::string string_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) malformed(std::string("expected a string field \"") + key + "\"");
    return j[key].get<std::string>();
}

template <typename T, typename Builtin, typename Names, typename Load>
T resolve(const std::string& source, Builtin builtin, Names names, Load load, const char* what) {
    for (const auto& n : names()) {
        if (n == source) return builtin(source);
    }
    if (std::filesystem::is_regular_file(source)) return load(read_file(source));
    throw UnknownBuiltin(std::string("unknown ") + what + " \"" + source + "\" (not a built-in name or a readable file)");
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

weierstrass::WeierstrassCurve curve_from_json(const std::string& text) {
    const json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("field") || !j["field"].is_object()) malformed("curve JSON needs a \"field\" object");
    const json& f = j["field"];
    if (!f.contains("k") || !f["k"].is_number_integer()) malformed("field.k must be an integer");
    const int k = f["k"].get<int>();
    if (k != 1 && k != 2) malformed("field.k must be 1 or 2");
    const std::string base = f.contains("base") ? string_field(f, "base") : "none";
    const auto field = algebra::FiniteField::gf(k);
    std::optional<algebra::Var> base_var;
    if (base != "none") base_var = algebra::var(base);
    std::array<algebra::RatFunc, 5> a;
    const std::array<const char*, 5> keys{"a1", "a2", "a3", "a4", "a6"};
    for (std::size_t i = 0; i < 5; ++i) {
        a[i] = j.contains(keys[i]) ? algebra::parse_ratfunc(string_field(j, keys[i]), field) : algebra::RatFunc(algebra::Poly(field));
    }
    return {field, base_var, a};
}

std::string curve_to_json(const weierstrass::WeierstrassCurve& c) {
    json j;
    j["field"]["k"] = c.field().size() == 2 ? 1 : 2;
    j["field"]["base"] = c.base() ? algebra::var_name(*c.base()) : std::string("none");
    const std::array<const char*, 5> keys{"a1", "a2", "a3", "a4", "a6"};
    for (std::size_t i = 0; i < 5; ++i) j[keys[i]] = c.coefficients()[i].to_string();
    return j.dump(2) + "\n";
}

derivations::Derivation derivation_from_json(const std::string& text) {
    const json j = detail::parse_json(text);
    if (!j.is_object()) malformed("derivation JSON must be an object");
    auto ctx = derivations::ParamContext::symbolic();
    if (j.contains("param") && !(j["param"].is_string() && j["param"].get<std::string>() == "symbolic")) {
        const json& p = j["param"];
        if (!p.is_object()) malformed("param must be \"symbolic\" or {\"a\": ...}");
        const std::string a = string_field(p, "a");
        int k = a.find('w') != std::string::npos ? 2 : 1;
        if (p.contains("k")) {
            if (!p["k"].is_number_integer()) malformed("param.k must be an integer");
            k = p["k"].get<int>();
        }
        const auto field = algebra::FiniteField::gf(k);
        const auto value = algebra::parse_poly(a, field);
        if (!value.is_constant()) malformed("param.a must be a field constant");
        ctx = derivations::ParamContext::specialized(field, value.constant_term());
    }
    // Coefficients mention t, x, a, b; they are parsed over the context field.
    const auto& field = ctx.field();
    return {algebra::parse_ratfunc(string_field(j, "coeff_t"), field), algebra::parse_ratfunc(string_field(j, "coeff_x"), field),
            ctx};
}

dynkin::DualGraph graph_from_json(const std::string& text) {
    const json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) malformed("graph JSON needs a \"vertices\" array");
    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) malformed("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<dynkin::DualGraph::Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) malformed("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() || !e[1].is_string() ||
                (e.size() == 3 && !e[2].is_number_integer()))
                malformed("each edge is [\"u\", \"v\"] or [\"u\", \"v\", multiplicity]");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), e.size() == 3 ? e[2].get<int>() : 1);
        }
    }
    return {std::move(names), edges};
}

std::string graph_to_json(const dynkin::DualGraph& g) {
    json j;
    j["vertices"] = g.names();
    j["edges"] = json::array();
    for (const auto& [a, b, m] : g.edges()) j["edges"].push_back(json::array({a, b, m}));
    return j.dump(2) + "\n";
}

weierstrass::WeierstrassCurve resolve_curve(const std::string& source) {
    return resolve<weierstrass::WeierstrassCurve>(source, weierstrass::builtin_curve, weierstrass::builtin_curve_names,
                                                  curve_from_json, "curve");
}

derivations::Derivation resolve_derivation(const std::string& source) {
    return resolve<derivations::Derivation>(
        source, [](const std::string& n) { return derivations::builtin_derivation(n); },
        [] { return std::vector<std::string>{"Dprime", "D"}; }, derivation_from_json, "derivation");
}

dynkin::DualGraph resolve_graph(const std::string& source) {
    return resolve<dynkin::DualGraph>(source, dynkin::builtin_graph,
                                      dynkin::builtin_graph_names,
                                      graph_from_json, "graph");
}

rules::FibrationFacts resolve_facts(const std::string& source) {
    return resolve<rules::FibrationFacts>(
        source, rules::builtin_facts, rules::builtin_facts_names,
        [&](const std::string& text) { return rules::facts_from_json(text, std::filesystem::path(source).stem().string()); },
        "facts");
}

}  // namespace enriques::io
