#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enriques/constructions/constructions.hpp"

namespace enriques::report {

using constructions::Status;

inline constexpr const char* kToolVersion = "1.0.0";

enum class Provenance { computed, paper_stated };
std::string to_string(Provenance p);

struct CheckResult {
    std::string check_id;
    Status status = Status::pass;
    std::string details;
    Provenance provenance = Provenance::computed;
};

/// A unit of work producing one or more results. Results of one unit share
/// its module, the first component of every check id.
struct CheckUnit {
    std::string module;
    std::function<std::vector<CheckResult>()> run;
};

struct Report {
    std::string version = kToolVersion;
    std::vector<CheckResult> checks;

    std::size_t count(Status s) const;
    bool any_fail() const { return count(Status::fail) != 0; }
};

/// "algebra", "weierstrass", "derivations", "curve_config", "dynkin",
/// "enriques_rules", "constructions".
std::vector<std::string> module_names();

/// Every registered unit in report order.
std::vector<CheckUnit> all_units();

/// Runs the units on `jobs` worker threads (0 = hardware concurrency).
/// Results are assembled in unit order regardless of completion order.
/// Exceptions escaping a unit are rethrown after all workers finish.
/// Throws InvalidParameter on duplicate check ids.
Report run_units(const std::vector<CheckUnit>& units, unsigned jobs);

/// The full suite, optionally restricted to one module. Throws
/// UnknownBuiltin for an unknown module name.
Report verify_all(const std::optional<std::string>& only, unsigned jobs);

/// Sorted-key JSON, two-space indent, trailing newline.
std::string to_json(const Report& r);

/// Existence table (class by type) followed by one row per check.
std::string to_markdown(const Report& r);

}  // namespace enriques::report
