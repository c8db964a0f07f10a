#include "enriques/report/report.hpp"

#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "enriques/errors.hpp"
#include "enriques/rules/rules.hpp"

namespace enriques::report {

std::string to_string(Provenance p) { return p == Provenance::computed ? "computed" : "paper-stated"; }

std::size_t Report::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s ? 1 : 0;
    return n;
}

Report run_units(const std::vector<CheckUnit>& units, unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, units.size())));
    std::vector<std::vector<CheckResult>> results(units.size());
    std::vector<std::exception_ptr> errors(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
            try {
                results[i] = units[i].run();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Report r;
    std::set<std::string> seen;
    for (auto& part : results) {
        for (auto& c : part) {
            if (!seen.insert(c.check_id).second) throw InvalidParameter("duplicate check id " + c.check_id);
            r.checks.push_back(std::move(c));
        }
    }
    return r;
}

Report verify_all(const std::optional<std::string>& only, unsigned jobs) {
    auto units = all_units();
    if (only) {
        const auto names = module_names();
        if (std::find(names.begin(), names.end(), *only) == names.end()) throw UnknownBuiltin("unknown module " + *only);
        std::erase_if(units, [&](const CheckUnit& u) { return u.module != *only; });
    }
    return run_units(units, jobs);
}

std::string to_json(const Report& r) {
    nlohmann::json j;
    j["tool"] = "enriques";
    j["version"] = r.version;
    j["summary"] = {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"open", r.count(Status::open)},
                    {"total", r.checks.size()}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"check_id", c.check_id},
                               {"status", constructions::to_string(c.status)},
                               {"details", c.details},
                               {"provenance", to_string(c.provenance)}});
    }
    return j.dump(2) + "\n";
}

namespace {

std::string escape_cell(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

}  // namespace

std::string to_markdown(const Report& r) {
    std::ostringstream md;
    md << "# enriques " << r.version << " verification report\n\n";
    md << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, " << r.count(Status::open) << " open, "
       << r.checks.size() << " total\n\n";
    const bool has_table = std::any_of(r.checks.begin(), r.checks.end(),
                                       [](const CheckResult& c) { return c.check_id.rfind("enriques_rules.table1.", 0) == 0; });
    if (has_table) {
        const auto table = rules::table1_report();
        md << "## Existence table\n\n(o: exists, x: does not exist)\n\n|  |";
        for (const auto& col : table) md << ' ' << col.type << " |";
        md << "\n|---|";
        for (std::size_t i = 0; i < table.size(); ++i) md << "---|";
        md << '\n';
        const std::array<const char*, 3> rows{"singular", "classical", "supersingular"};
        for (std::size_t row = 0; row < rows.size(); ++row) {
            md << "| " << rows[row] << " |";
            for (const auto& col : table) md << ' ' << (col.cells[row] == rules::Cell::exists_by_construction ? 'o' : 'x') << " |";
            md << '\n';
        }
        md << '\n';
    }
    md << "## Checks\n\n| check | status | provenance | details |\n|---|---|---|---|\n";
    for (const auto& c : r.checks) {
        md << "| " << c.check_id << " | " << constructions::to_string(c.status) << " | " << to_string(c.provenance) << " | "
           << escape_cell(c.details) << " |\n";
    }
    return md.str();
}

}  // namespace enriques::report
