#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

#include <json.hpp>

#include "doctest.h"
#include "enriques/dynkin/graph.hpp"
#include "enriques/report/io.hpp"
#include "enriques/rules/rules.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ENRIQUES_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("enriques_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

const nlohmann::json& full_report() {
    static const nlohmann::json j = nlohmann::json::parse(run("verify all --format json --jobs 2").out);
    return j;
}

std::set<std::string> report_ids() {
    std::set<std::string> ids;
    for (const auto& c : full_report()["checks"]) ids.insert(c["check_id"].get<std::string>());
    return ids;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("verify all: at least 40 unique checks, only the stated tau' point fails") {
        const auto r = run("verify all --format json");
        CHECK(r.code == 1);
        const auto j = nlohmann::json::parse(r.out);
        std::set<std::string> ids;
        std::vector<std::string> failed;
        for (const auto& c : j["checks"]) {
            CHECK(ids.insert(c["check_id"].get<std::string>()).second);
            const auto status = c["status"].get<std::string>();
            CHECK((status == "pass" || status == "fail" || status == "open"));
            if (status == "fail") failed.push_back(c["check_id"]);
            const auto prov = c["provenance"].get<std::string>();
            CHECK((prov == "computed" || prov == "paper-stated"));
        }
        CHECK(ids.size() >= 40);
        CHECK(failed == std::vector<std::string>{"constructions.kummer.tau_prime_printed_fixed_point"});
        CHECK(j["version"] == "1.0.0");
    }

    TEST_CASE("verify output is byte-stable across job counts") {
        const auto a = run("verify all --format json --jobs 1").out;
        const auto b = run("verify all --format json --jobs 4").out;
        CHECK(a == b);
        CHECK(run("verify all --format md --jobs 3").out == run("verify all --format md --jobs 1").out);
    }

    TEST_CASE("verify --only filters by module") {
        const auto r = run("verify all --only weierstrass");
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["checks"].size() >= 5);
        for (const auto& c : j["checks"]) CHECK(c["check_id"].get<std::string>().rfind("weierstrass.", 0) == 0);
        CHECK(run("verify all --only nonsense").code == 2);
    }

    TEST_CASE("markdown report renders the existence table") {
        const auto md = run("verify all --format md").out;
        CHECK(md.find("## Existence table") != std::string::npos);
        CHECK(md.find("| singular | o | o | x | x | x | o | x |") != std::string::npos);
        CHECK(md.find("| classical | x | x | x | x | x | x | o |") != std::string::npos);
        CHECK(md.find("| supersingular | x | x | x | x | x | x | o |") != std::string::npos);
    }

    TEST_CASE("--out writes the report to a file") {
        const auto path = std::filesystem::temp_directory_path() / "enriques_cli_out.json";
        std::filesystem::remove(path);
        CHECK(run("verify all --only dynkin --out " + path.string()).code == 0);
        const auto j = nlohmann::json::parse(enriques::io::read_file(path.string()));
        CHECK(j["summary"]["fail"] == 0);
    }

    TEST_CASE("fibration Ystar") {
        const auto r = run("fibration Ystar");
        CHECK(r.code == 0);
        auto fibers = nlohmann::json::parse(r.out)["geometric_fibers"].get<std::vector<std::string>>();
        std::sort(fibers.begin(), fibers.end());
        CHECK(fibers == std::vector<std::string>{"I10", "I10", "I2", "I2"});
    }

    TEST_CASE("graph typeVII --maximal --vinberg --isotropic") {
        const auto r = run("graph typeVII --maximal --vinberg --isotropic");
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        std::set<std::string> types;
        for (const auto& m : j["maximal"]) {
            types.insert(m["type"].get<std::string>());
            CHECK(m["rank"] == 8);
        }
        CHECK(types == std::set<std::string>{"A~8", "A~4+A~4", "A~5+A~2+A~1", "A~7+A~1"});
        CHECK(j["vinberg"]["criterion_holds"] == true);
        CHECK(j["vinberg"]["finite_index"] == true);
        CHECK(j["isotropic"].size() == 4);
    }

    TEST_CASE("graph from a JSON file") {
        const auto path = temp_file("e10.json", enriques::io::graph_to_json(enriques::dynkin::build_e10_graph()));
        const auto j = nlohmann::json::parse(run("graph " + path.string() + " --maximal").out);
        REQUIRE(j["maximal"].size() == 1);
        CHECK(j["maximal"][0]["type"] == "E~8");
        const auto cex = temp_file("c6p.json", enriques::io::graph_to_json(enriques::dynkin::build_cycle_with_pendant(6)));
        const auto v = nlohmann::json::parse(run("graph " + cex.string() + " --vinberg").out);
        CHECK(v["vinberg"]["criterion_holds"] == false);
        CHECK(v["vinberg"]["counterexample"]["type"] == "A~5");
    }

    TEST_CASE("classify") {
        CHECK(nlohmann::json::parse(run("classify factsIII").out)["verdict"] == "none (non-existent)");
        const auto vii = nlohmann::json::parse(run("classify factsVII").out);
        CHECK(vii["classes"] == nlohmann::json::array({"classical", "supersingular"}));
        const auto path = temp_file("facts.json", R"J({"fibrations": [{"fibers": ["I6", "IV", "I2"], "multiple": ["IV"]}]})J");
        CHECK(nlohmann::json::parse(run("classify " + path.string()).out)["classes"] ==
              nlohmann::json::array({"classical", "supersingular"}));
    }

    TEST_CASE("derivation and curve files") {
        const auto d = temp_file("d.json", R"J({"coeff_t": "(t + a)*(t + b)", "coeff_x": "(1 + t^2*x)/(t + 1)", "param": "symbolic"})J");
        const auto dj = nlohmann::json::parse(run("derivation " + d.string()).out);
        CHECK(dj["p_closure_multiplier"] == "a^2/(a + 1)");
        CHECK(dj["type"] == "multiplicative");
        const auto zero = temp_file("d0.json", R"J({"coeff_t": "(t + a)*(t + b)", "coeff_x": "(1 + t^2*x)/(t + 1)", "param": {"a": "0"}})J");
        CHECK(nlohmann::json::parse(run("derivation " + zero.string()).out)["type"] == "additive");
        const auto c = temp_file("c.json", R"J({"field": {"k": 1, "base": "s"}, "a1": "s", "a3": "1", "a2": "1", "a6": "s"})J");
        const auto cj = nlohmann::json::parse(run("fibration " + c.string()).out);
        CHECK(cj["discriminant"] == "s^7 + s^4 + s^3 + 1");
    }

    TEST_CASE("constructions subcommand") {
        const auto ok = run("constructions type_VI");
        CHECK(ok.code == 0);
        CHECK(nlohmann::json::parse(ok.out)["checks"].size() >= 5);
        const auto k = run("constructions kummer");
        CHECK(k.code == 1);
        CHECK(run("constructions type_IX").code == 4);
    }

    TEST_CASE("exit codes") {
        CHECK(run("fibration nope").code == 4);
        CHECK(run("graph nope --maximal").code == 4);
        CHECK(run("classify factsVIII").code == 4);
        CHECK(run("").code == 2);
        CHECK(run("graph typeVII --format xml").code == 2);
        const auto bad_json = temp_file("bad.json", "{\"vertices\": [\"a\",\n  ]}");
        CHECK(run("graph " + bad_json.string()).code == 3);
        const auto bad_poly = temp_file("badpoly.json", R"J({"field": {"k": 1, "base": "t"}, "a1": "t^^2", "a6": "1"})J");
        CHECK(run("fibration " + bad_poly.string()).code == 3);
        const auto bad_facts = temp_file("badfacts.json", "{\"fibrations\": [");
        CHECK(run("classify " + bad_facts.string()).code == 3);
        CHECK(run("--help").code == 0);
        CHECK(run("--help").out.find("Exit codes") != std::string::npos);
    }

    TEST_CASE("documented check ids exist") {
        const auto ids = report_ids();
        for (const auto& col : enriques::rules::table1_report()) {
            for (const auto& id : col.construction_checks) CHECK_MESSAGE(ids.count(id) == 1, id);
        }
        const auto readme = std::filesystem::path(ENRIQUES_SOURCE_DIR) / "README.md";
        if (std::filesystem::exists(readme)) {
            const auto text = enriques::io::read_file(readme.string());
            const std::regex id_re("`((algebra|weierstrass|derivations|curve_config|dynkin|enriques_rules|constructions)\\.[A-Za-z0-9_.]+)`");
            for (auto it = std::sregex_iterator(text.begin(), text.end(), id_re); it != std::sregex_iterator(); ++it) {
                const std::string id = (*it)[1];
                const bool exact = ids.count(id) == 1;
                const bool prefix = std::any_of(ids.begin(), ids.end(), [&](const std::string& x) { return x.rfind(id + ".", 0) == 0; });
                CHECK_MESSAGE((exact || prefix), id);
            }
        }
    }
}
