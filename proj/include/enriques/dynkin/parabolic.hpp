#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enriques/dynkin/graph.hpp"
#include "enriques/weierstrass/kodaira.hpp"

namespace enriques::dynkin {

/// Affine Dynkin type: A~n (n >= 1), D~n (n >= 4), E~6, E~7, E~8.
struct AffineType {
    char family = 'A';
    int n = 1;

    /// "A~8", "D~6", "E~8".
    std::string to_string() const;
    static std::optional<AffineType> parse(const std::string& text);
    friend auto operator<=>(const AffineType&, const AffineType&) = default;
};

struct ParabolicComponent {
    std::vector<std::size_t> vertices;  // ascending
    AffineType type;
    int rank() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

struct ParabolicSubdiagram {
    /// Components sorted by decreasing size, then by vertex list.
    std::vector<ParabolicComponent> components;

    int rank() const noexcept;
    /// "A~5+A~2+A~1".
    std::string type_string() const;
    std::vector<AffineType> types() const;
};

/// Exact test: is the induced Gram matrix negative semidefinite of corank
/// exactly 1? Returns the shape label when it is. `subset` must be connected.
std::optional<AffineType> recognize_connected_parabolic(const DualGraph& g, const std::vector<std::size_t>& subset);

/// Every connected parabolic subset with at most `max_size` vertices. Sets
/// are grown one neighbor at a time from negative definite ones only.
std::vector<ParabolicComponent> connected_parabolics(const DualGraph& g, int max_size = 10);

/// All parabolic subdiagrams: unions of pairwise disjoint, mutually
/// non-adjacent connected parabolic components.
std::vector<ParabolicSubdiagram> enumerate_parabolics(const DualGraph& g);
/// Those of maximal rank.
std::vector<ParabolicSubdiagram> maximal_parabolics(const DualGraph& g);
/// Those not contained (as vertex sets) in a larger parabolic subdiagram.
std::vector<ParabolicSubdiagram> inclusion_maximal_parabolics(const DualGraph& g);

/// Primitive positive kernel vector of the component's Gram matrix (the
/// marks), in the order of `component`. Throws NotParabolic.
std::vector<long> isotropic_class(const DualGraph& g, const std::vector<std::size_t>& component);

/// True iff some vertex outside the subdiagram pairs oddly with the
/// component's isotropic class, which forces the fiber it supports to be
/// multiple. Throws NotParabolic when `component` is not one of its components.
bool multiple_fiber_test(const DualGraph& g, const ParabolicSubdiagram& parabolic, std::size_t component);

using weierstrass::KodairaType;

/// Reducible fiber combinations allowed on an Enriques surface for a
/// rank-8 parabolic subdiagram.
const std::vector<std::vector<KodairaType>>& kodaira_catalogue();

/// Per-component Kodaira labels compatible with the affine types whose
/// multiset is in the catalogue. Each assignment lists one label per
/// component in component order.
std::vector<std::vector<KodairaType>> kodaira_assignments(const std::vector<AffineType>& types);
inline std::vector<std::vector<KodairaType>> kodaira_assignments(const ParabolicSubdiagram& p) {
    return kodaira_assignments(p.types());
}

struct VinbergWitness {
    ParabolicComponent component;
    /// A rank-8 parabolic subdiagram containing the component, if any.
    std::optional<ParabolicSubdiagram> extension;
};

struct VinbergResult {
    /// Every connected parabolic extends to a rank-8 one.
    bool criterion_holds;
    /// Gram rank is 10 (the graph spans a hyperbolic rank-10 lattice).
    bool nondegenerate;
    bool finite_index;
    int gram_rank;
    std::vector<VinbergWitness> witnesses;
    /// First connected parabolic with no rank-8 extension.
    std::optional<ParabolicComponent> counterexample;
};

/// Throws DegenerateGraph when the Gram signature cannot embed in (1, 9).
VinbergResult vinberg_check(const DualGraph& g);

}  // namespace enriques::dynkin
