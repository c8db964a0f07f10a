#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "enriques/config/curve_config.hpp"

namespace enriques::dynkin {

using config::IntMatrix;

/// Dual graph of (-2)-curves: vertex i and j are joined by an edge of
/// multiplicity <i, j> in {1, 2}. At most 64 vertices.
class DualGraph {
public:
    using Edge = std::tuple<std::string, std::string, int>;

    DualGraph() = default;
    /// Throws TripleEdge for multiplicity >= 3, InvalidParameter for loops,
    /// repeated edges, unknown endpoints or more than 64 vertices.
    DualGraph(std::vector<std::string> names, const std::vector<Edge>& edges);
    /// Off-diagonal Gram entries become edges; the diagonal must be -2.
    static DualGraph from_config(const config::CurveConfig& cfg);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Throws InvalidParameter.
    std::size_t index_of(const std::string& name) const;
    int mult(std::size_t i, std::size_t j) const noexcept { return mult_[i][j]; }
    /// Neighbor bitmask.
    std::uint64_t neighbors(std::size_t i) const noexcept { return adj_[i]; }
    int degree(std::size_t i) const noexcept;
    std::size_t edge_count() const noexcept;
    /// Edges (i < j) in index order.
    std::vector<Edge> edges() const;
    /// Diagonal -2, off-diagonal multiplicities.
    IntMatrix gram() const;
    /// Induced subgraph on the listed vertices, in that order.
    DualGraph induced(const std::vector<std::size_t>& vertices) const;
    bool connected(std::uint64_t subset) const;

    friend bool operator==(const DualGraph& a, const DualGraph& b) {
        return a.names_ == b.names_ && a.mult_ == b.mult_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> mult_;
    std::vector<std::uint64_t> adj_;
    std::map<std::string, std::size_t> index_;
};

/// Vertices are the 2-subsets "12", "13", ... of {1..5}; adjacent iff disjoint.
DualGraph build_petersen();
/// One vertex per edge, named "a-b"; adjacent iff the edges share an endpoint.
DualGraph line_graph(const DualGraph& g);
/// Line graph of the Petersen graph (an edge {ab, cd} is named "ab-cd") plus
/// K1..K5 joined pairwise by double edges, K_e joined by a double edge to
/// the three edges whose four labels avoid e.
DualGraph build_type_vii_graph();
/// Path E1 - ... - E9 with E10 attached to E3.
DualGraph build_e10_graph();
/// Simple n-cycle C1..Cn.
DualGraph build_cycle(int n);
/// n-cycle plus a pendant vertex P attached to C1.
DualGraph build_cycle_with_pendant(int n);
/// "petersen", "petersen-line", "typeVII", "E10". Throws UnknownBuiltin.
DualGraph builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

/// Vertex maps phi with mult(i, j) = mult(phi i, phi j), found by
/// backtracking with degree/multiplicity refinement.
std::optional<std::vector<std::size_t>> find_isomorphism(const DualGraph& a, const DualGraph& b);
/// Number of automorphisms (stops counting at `limit`).
std::size_t automorphism_count(const DualGraph& g, std::size_t limit = 1u << 20);

}  // namespace enriques::dynkin
