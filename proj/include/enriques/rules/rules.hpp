#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "enriques/dynkin/parabolic.hpp"

namespace enriques::rules {

enum class EnriquesClass { classical, singular, supersingular };
inline constexpr std::array<EnriquesClass, 3> kAllClasses{EnriquesClass::singular, EnriquesClass::classical,
                                                          EnriquesClass::supersingular};
std::string to_string(EnriquesClass c);

/// Subset of {classical, singular, supersingular}; empty means non-existence.
class ClassSet {
public:
    static ClassSet all() { return ClassSet(7); }
    static ClassSet none() { return ClassSet(0); }

    bool contains(EnriquesClass c) const noexcept { return (bits_ >> static_cast<int>(c)) & 1u; }
    void remove(EnriquesClass c) noexcept { bits_ &= ~(1u << static_cast<int>(c)); }
    void insert(EnriquesClass c) noexcept { bits_ |= 1u << static_cast<int>(c); }
    bool empty() const noexcept { return bits_ == 0; }
    bool subset_of(const ClassSet& o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    ClassSet intersect(const ClassSet& o) const noexcept { return ClassSet(bits_ & o.bits_); }
    /// Members in the order classical, singular, supersingular.
    std::vector<EnriquesClass> members() const;
    /// "{classical, supersingular}", "{}".
    std::string to_string() const;

    friend bool operator==(const ClassSet&, const ClassSet&) = default;

private:
    explicit ClassSet(unsigned bits) : bits_(bits) {}
    unsigned bits_;
};

enum class ReductionKind { multiplicative, additive, unknown };
std::string to_string(ReductionKind k);

/// One reducible fiber. `label` is a Kodaira label ("IV", "I6"), an affine
/// type when only the diagram is known ("D~6", "A~1"), or "In" for an
/// unspecified multiplicative fiber.
struct FiberFact {
    std::string label;
    bool multiple = false;

    /// Throws MalformedFacts for an unknown label.
    ReductionKind reduction() const;
};

struct Fibration {
    std::vector<FiberFact> fibers;
    /// Lower bound on the number of multiple fibers among `fibers`, for
    /// statements that do not say which fibers they are.
    int min_multiple = 0;

    /// max(flagged fibers, min_multiple).
    int forced_multiple_count() const noexcept;
    /// "(I6, IV*, I2)" with multiple fibers starred by "[m]".
    std::string to_string() const;
};

struct FibrationFacts {
    std::string name;
    std::vector<Fibration> fibrations;
    /// "computed" or "paper-stated".
    std::string provenance = "computed";
};

/// Throws MalformedFacts (unknown label, min_multiple out of range, no fibers).
void validate(const Fibration& f);

ClassSet admissible_classes_for_fibration(const Fibration& f);

/// One removal made by the rules.
struct Exclusion {
    std::size_t fibration;
    EnriquesClass removed;
    std::string reason;
};

struct Verdict {
    ClassSet classes = ClassSet::all();
    std::vector<Exclusion> exclusions;
};

/// Intersection over all fibrations, with the removals that produced it.
Verdict classify_traced(const FibrationFacts& facts);
inline ClassSet classify(const FibrationFacts& facts) { return classify_traced(facts).classes; }

/// Verdict after dropping fibration i, for each i.
std::vector<ClassSet> drop_one_sensitivity(const FibrationFacts& facts);

/// One fibration per distinct (labels, multiple flags) among the rank-8
/// parabolic subdiagrams. No fibrations when the maximal rank is not 8.
/// Throws AmbiguousAssignment when the catalogue allows several labelings.
FibrationFacts facts_from_graph(const dynkin::DualGraph& g, const std::string& name = "graph");

/// "factsI" ... "factsVII". Throws UnknownBuiltin.
FibrationFacts builtin_facts(const std::string& name);
std::vector<std::string> builtin_facts_names();

/// {"fibrations": [{"fibers": [...], "multiple": [...], "min_multiple": n}]}.
/// Throws MalformedFacts.
FibrationFacts facts_from_json(const std::string& text, const std::string& name = "file");
std::string facts_to_json(const FibrationFacts& facts);

enum class Cell { exists_by_construction, not_exists };
std::string to_string(Cell c);

struct Table1Column {
    std::string type;  // "I" ... "VII"
    FibrationFacts facts;
    Verdict verdict;
    /// Cells in the order singular, classical, supersingular.
    std::array<Cell, 3> cells;
    /// Report checks that certify the existence cells.
    std::vector<std::string> construction_checks;
};

std::vector<Table1Column> table1_report();

}  // namespace enriques::rules
