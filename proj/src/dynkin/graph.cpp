#include "enriques/dynkin/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "enriques/errors.hpp"

namespace enriques::dynkin {

DualGraph::DualGraph(std::vector<std::string> names, const std::vector<Edge>& edges) : names_(std::move(names)) {
    const std::size_t n = names_.size();
    if (n > 64) throw InvalidParameter("dual graph: at most 64 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second) throw InvalidParameter("dual graph: duplicate vertex " + names_[i]);
    }
    mult_.assign(n, std::vector<int>(n, 0));
    adj_.assign(n, 0);
    for (const auto& [a, b, m] : edges) {
        const std::size_t i = index_of(a), j = index_of(b);
        if (i == j) throw InvalidParameter("dual graph: loop at " + a);
        if (m >= 3) throw TripleEdge("dual graph: edge " + a + " - " + b + " has multiplicity " + std::to_string(m));
        if (m <= 0) throw InvalidParameter("dual graph: edge " + a + " - " + b + " has multiplicity " + std::to_string(m));
        if (mult_[i][j] != 0) throw InvalidParameter("dual graph: repeated edge " + a + " - " + b);
        mult_[i][j] = mult_[j][i] = m;
        adj_[i] |= std::uint64_t{1} << j;
        adj_[j] |= std::uint64_t{1} << i;
    }
}

DualGraph DualGraph::from_config(const config::CurveConfig& cfg) {
    const auto& g = cfg.gram();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (g[i][i] != -2) throw InvalidParameter("dual graph: " + cfg.names()[i] + " is not a (-2)-curve");
        for (std::size_t j = i + 1; j < cfg.size(); ++j) {
            if (g[i][j] < 0) throw InvalidParameter("dual graph: negative pairing between distinct curves");
            if (g[i][j] > 0) edges.emplace_back(cfg.names()[i], cfg.names()[j], static_cast<int>(g[i][j]));
        }
    }
    return DualGraph(cfg.names(), edges);
}

std::size_t DualGraph::index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw InvalidParameter("dual graph: unknown vertex " + name);
    return it->second;
}

int DualGraph::degree(std::size_t i) const noexcept { return std::popcount(adj_[i]); }

std::size_t DualGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto a : adj_) total += static_cast<std::size_t>(std::popcount(a));
    return total / 2;
}

std::vector<DualGraph::Edge> DualGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (mult_[i][j] != 0) out.emplace_back(names_[i], names_[j], mult_[i][j]);
        }
    }
    return out;
}

IntMatrix DualGraph::gram() const {
    IntMatrix g(size(), std::vector<long>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) g[i][j] = i == j ? -2 : mult_[i][j];
    }
    return g;
}

DualGraph DualGraph::induced(const std::vector<std::size_t>& vertices) const {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (const auto v : vertices) names.push_back(names_.at(v));
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            const int m = mult_[vertices[a]][vertices[b]];
            if (m != 0) edges.emplace_back(names[a], names[b], m);
        }
    }
    return DualGraph(std::move(names), edges);
}

bool DualGraph::connected(std::uint64_t subset) const {
    if (subset == 0) return false;
    std::uint64_t seen = subset & (~subset + 1), frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
        next &= subset & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == subset;
}

// ---- builders ----

DualGraph build_petersen() {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 5; ++a) {
        for (int b = a + 1; b <= 5; ++b) {
            names.push_back(std::to_string(a) + std::to_string(b));
            pairs.emplace_back(a, b);
        }
    }
    std::vector<DualGraph::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(names[i], names[j], 1);
        }
    }
    return DualGraph(names, edges);
}

DualGraph line_graph(const DualGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g.mult(i, j) != 0) {
                ends.emplace_back(i, j);
                names.push_back(g.names()[i] + "-" + g.names()[j]);
            }
        }
    }
    std::vector<DualGraph::Edge> edges;
    for (std::size_t e = 0; e < ends.size(); ++e) {
        for (std::size_t f = e + 1; f < ends.size(); ++f) {
            const auto [a, b] = ends[e];
            const auto [c, d] = ends[f];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(names[e], names[f], 1);
        }
    }
    return DualGraph(names, edges);
}

DualGraph build_type_vii_graph() {
    const DualGraph line = line_graph(build_petersen());
    std::vector<std::string> names = line.names();
    std::vector<DualGraph::Edge> edges = line.edges();
    for (int e = 1; e <= 5; ++e) names.push_back("K" + std::to_string(e));
    for (int e = 1; e <= 5; ++e) {
        for (int f = e + 1; f <= 5; ++f) edges.emplace_back("K" + std::to_string(e), "K" + std::to_string(f), 2);
    }
    // "ab-cd" avoids exactly one label e.
    for (const auto& name : line.names()) {
        int missing = 15;
        for (const char c : name) {
            if (c != '-') missing -= c - '0';
        }
        edges.emplace_back(name, "K" + std::to_string(missing), 2);
    }
    return DualGraph(names, edges);
}

DualGraph build_e10_graph() {
    std::vector<std::string> names;
    std::vector<DualGraph::Edge> edges;
    for (int i = 1; i <= 10; ++i) names.push_back("E" + std::to_string(i));
    for (int i = 1; i < 9; ++i) edges.emplace_back(names[i - 1], names[i], 1);
    edges.emplace_back("E3", "E10", 1);
    return DualGraph(names, edges);
}

DualGraph build_cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle needs at least 3 vertices");
    std::vector<std::string> names;
    std::vector<DualGraph::Edge> edges;
    for (int i = 1; i <= n; ++i) names.push_back("C" + std::to_string(i));
    for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n], 1);
    return DualGraph(names, edges);
}

DualGraph build_cycle_with_pendant(int n) {
    const DualGraph c = build_cycle(n);
    auto names = c.names();
    auto edges = c.edges();
    names.push_back("P");
    edges.emplace_back("C1", "P", 1);
    return DualGraph(names, edges);
}

DualGraph builtin_graph(const std::string& name) {
    if (name == "petersen") return build_petersen();
    if (name == "petersen-line") return line_graph(build_petersen());
    if (name == "typeVII") return build_type_vii_graph();
    if (name == "E10") return build_e10_graph();
    throw UnknownBuiltin("unknown graph: " + name);
}

std::vector<std::string> builtin_graph_names() { return {"petersen", "petersen-line", "typeVII", "E10"}; }

// ---- isomorphism ----

namespace {

// Colour refinement run on both graphs with a shared colour table, so equal
// colours are comparable across graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const DualGraph& a, const DualGraph& b) {
    auto initial = [](const DualGraph& g) {
        std::vector<std::vector<int>> sig(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            int simple = 0, dbl = 0;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g.mult(i, j) == 1) ++simple;
                if (g.mult(i, j) == 2) ++dbl;
            }
            sig[i] = {simple, dbl};
        }
        return sig;
    };
    auto sa = initial(a), sb = initial(b);
    std::vector<int> ca, cb;
    std::size_t classes = 0;
    for (int round = 0; round < 64; ++round) {
        std::map<std::vector<int>, int> table;
        for (const auto& s : sa) table.emplace(s, 0);
        for (const auto& s : sb) table.emplace(s, 0);
        int id = 0;
        for (auto& [k, v] : table) v = id++;
        ca.clear();
        cb.clear();
        for (const auto& s : sa) ca.push_back(table[s]);
        for (const auto& s : sb) cb.push_back(table[s]);
        if (table.size() == classes) break;
        classes = table.size();
        auto next = [](const DualGraph& g, const std::vector<int>& col) {
            std::vector<std::vector<int>> sig(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) {
                std::vector<int> nb;
                for (std::size_t j = 0; j < g.size(); ++j) {
                    if (g.mult(i, j) != 0) nb.push_back(col[j] * 4 + g.mult(i, j));
                }
                std::sort(nb.begin(), nb.end());
                sig[i] = {col[i]};
                sig[i].insert(sig[i].end(), nb.begin(), nb.end());
            }
            return sig;
        };
        sa = next(a, ca);
        sb = next(b, cb);
    }
    return {ca, cb};
}

// Calls `visit` for each isomorphism a -> b until it returns false.
void search_isomorphisms(const DualGraph& a, const DualGraph& b,
                         const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    const std::size_t n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count()) return;
    const auto [ca, cb] = refine(a, b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return;
    }
    // Order: BFS from the vertex in the rarest colour so later vertices are
    // constrained by already-mapped neighbours.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
        std::size_t start = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!placed[i] && (start == n || std::count(ca.begin(), ca.end(), ca[i]) < std::count(ca.begin(), ca.end(), ca[start])))
                start = i;
        }
        std::vector<std::size_t> queue{start};
        placed[start] = true;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            order.push_back(queue[q]);
            for (std::size_t j = 0; j < n; ++j) {
                if (!placed[j] && a.mult(queue[q], j) != 0) {
                    placed[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    std::vector<std::size_t> phi(n, n);
    std::vector<bool> used(n, false);
    bool stop = false;
    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (stop) return;
        if (depth == n) {
            if (!visit(phi)) stop = true;
            return;
        }
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < n && !stop; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t u = order[d];
                ok = a.mult(v, u) == b.mult(w, phi[u]);
            }
            if (!ok) continue;
            phi[v] = w;
            used[w] = true;
            extend(depth + 1);
            used[w] = false;
            phi[v] = n;
        }
    };
    extend(0);
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const DualGraph& a, const DualGraph& b) {
    std::optional<std::vector<std::size_t>> found;
    search_isomorphisms(a, b, [&](const std::vector<std::size_t>& phi) {
        found = phi;
        return false;
    });
    return found;
}

std::size_t automorphism_count(const DualGraph& g, std::size_t limit) {
    std::size_t count = 0;
    search_isomorphisms(g, g, [&](const std::vector<std::size_t>&) { return ++count < limit; });
    return count;
}

}  // namespace enriques::dynkin
