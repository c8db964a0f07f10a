#include "enriques/dynkin/parabolic.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <numeric>
#include <set>

#include "enriques/config/curve_config.hpp"
#include "enriques/errors.hpp"

namespace enriques::dynkin {

namespace mp = boost::multiprecision;
using weierstrass::KodairaFamily;

// ---- labels ----

std::string AffineType::to_string() const { return std::string(1, family) + "~" + std::to_string(n); }

std::optional<AffineType> AffineType::parse(const std::string& text) {
    if (text.size() < 3 || text[1] != '~') return std::nullopt;
    const char f = text[0];
    if (f != 'A' && f != 'D' && f != 'E') return std::nullopt;
    int n = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9' || n > 1000) return std::nullopt;
        n = n * 10 + (text[i] - '0');
    }
    if ((f == 'A' && n < 1) || (f == 'D' && n < 4) || (f == 'E' && (n < 6 || n > 8))) return std::nullopt;
    return AffineType{f, n};
}

int ParabolicSubdiagram::rank() const noexcept {
    int r = 0;
    for (const auto& c : components) r += c.rank();
    return r;
}

std::vector<AffineType> ParabolicSubdiagram::types() const {
    std::vector<AffineType> out;
    for (const auto& c : components) out.push_back(c.type);
    return out;
}

std::string ParabolicSubdiagram::type_string() const {
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "+") + c.type.to_string();
    return s;
}

namespace {

std::uint64_t mask_of(const std::vector<std::size_t>& vs) {
    std::uint64_t m = 0;
    for (const auto v : vs) m |= std::uint64_t{1} << v;
    return m;
}

std::vector<std::vector<mp::cpp_rational>> negated_gram(const DualGraph& g, const std::vector<std::size_t>& s) {
    std::vector<std::vector<mp::cpp_rational>> m(s.size(), std::vector<mp::cpp_rational>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = i == j ? 2 : -g.mult(s[i], s[j]);
    }
    return m;
}

// Corank of a symmetric rational matrix if it is positive semidefinite.
// Symmetric elimination: a zero pivot must have a zero row, a negative one
// means indefinite.
std::optional<int> psd_corank(std::vector<std::vector<mp::cpp_rational>> m) {
    const std::size_t n = m.size();
    int corank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] < 0) return std::nullopt;
        if (m[k][k] == 0) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m[k][j] != 0) return std::nullopt;
            }
            ++corank;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const mp::cpp_rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return corank;
}

// Shape label of a connected parabolic set.
AffineType shape_label(const DualGraph& g, const std::vector<std::size_t>& s) {
    const std::size_t n = s.size();
    std::size_t edges = 0;
    bool double_edge = false;
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && g.mult(s[i], s[j]) != 0) {
                ++deg[i];
                if (i < j) ++edges;
                if (g.mult(s[i], s[j]) == 2) double_edge = true;
            }
        }
    }
    const int rank = static_cast<int>(n) - 1;
    if (double_edge || edges == n) return {'A', rank};
    // Tree: branch profile.
    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i) {
        if (deg[i] >= 3) branch.push_back(i);
    }
    if (branch.size() == 2 || (branch.size() == 1 && deg[branch[0]] == 4)) return {'D', rank};
    if (branch.size() == 1) {
        std::vector<int> arms;
        const std::size_t c = branch[0];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == c || g.mult(s[c], s[j]) == 0) continue;
            int len = 1;
            std::size_t prev = c, cur = j;
            for (;;) {
                std::size_t nxt = n;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != prev && k != cur && g.mult(s[cur], s[k]) != 0) nxt = k;
                }
                if (nxt == n) break;
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<int>{2, 2, 2}) return {'E', 6};
        if (arms == std::vector<int>{1, 3, 3}) return {'E', 7};
        if (arms == std::vector<int>{1, 2, 5}) return {'E', 8};
    }
    throw InvalidParameter("parabolic set with unrecognized shape");
}

// Bareiss determinant of -G on the listed vertices. When every proper prefix
// is negative definite the leading minors are positive and no pivoting is
// needed; otherwise rows are swapped.
long det_negated_gram(const DualGraph& g, const std::vector<std::size_t>& s) {
    const std::size_t n = s.size();
    long m[64][64];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? 2 : -g.mult(s[i], s[j]);
    }
    long prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k][j], m[r][j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
                m[i][j] = static_cast<long>(v / prev);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool component_less(const ParabolicComponent& a, const ParabolicComponent& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    return a.vertices < b.vertices;
}

}  // namespace

std::optional<AffineType> recognize_connected_parabolic(const DualGraph& g, const std::vector<std::size_t>& subset) {
    if (subset.empty()) return std::nullopt;
    for (const auto v : subset) {
        if (v >= g.size()) throw InvalidParameter("vertex index out of range");
    }
    if (!g.connected(mask_of(subset))) throw InvalidParameter("subset is not connected");
    const auto corank = psd_corank(negated_gram(g, subset));
    if (!corank || *corank != 1) return std::nullopt;
    return shape_label(g, subset);
}

std::vector<ParabolicComponent> connected_parabolics(const DualGraph& g, int max_size) {
    std::vector<ParabolicComponent> out;
    std::vector<std::size_t> verts;
    // Connected-set enumeration in which each set is produced once, from its
    // least vertex; only negative definite sets are extended.
    std::function<void(std::uint64_t, std::uint64_t, std::size_t)> grow = [&](std::uint64_t ext, std::uint64_t closed,
                                                                               std::size_t root) {
        const std::uint64_t above = ~((std::uint64_t{2} << root) - 1);
        while (ext != 0) {
            const std::size_t w = static_cast<std::size_t>(std::countr_zero(ext));
            ext &= ext - 1;
            verts.push_back(w);
            const long det = det_negated_gram(g, verts);
            if (det == 0) {
                ParabolicComponent c;
                c.vertices = verts;
                std::sort(c.vertices.begin(), c.vertices.end());
                c.type = shape_label(g, c.vertices);
                out.push_back(std::move(c));
            } else if (det > 0 && static_cast<int>(verts.size()) < max_size) {
                grow(ext | (g.neighbors(w) & ~closed & above), closed | g.neighbors(w), root);
            }
            verts.pop_back();
        }
    };
    for (std::size_t r = 0; r < g.size(); ++r) {
        verts = {r};
        const std::uint64_t above = ~((std::uint64_t{2} << r) - 1);
        grow(g.neighbors(r) & above, g.neighbors(r) | (std::uint64_t{1} << r), r);
    }
    std::sort(out.begin(), out.end(), component_less);
    return out;
}

std::vector<ParabolicSubdiagram> enumerate_parabolics(const DualGraph& g) {
    const auto comps = connected_parabolics(g);
    std::vector<std::uint64_t> mask, closed;
    for (const auto& c : comps) {
        mask.push_back(mask_of(c.vertices));
        std::uint64_t n = mask.back();
        for (const auto v : c.vertices) n |= g.neighbors(v);
        closed.push_back(n);
    }
    std::vector<ParabolicSubdiagram> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::uint64_t)> pick = [&](std::size_t from, std::uint64_t blocked) {
        for (std::size_t i = from; i < comps.size(); ++i) {
            if ((mask[i] & blocked) != 0) continue;
            chosen.push_back(i);
            ParabolicSubdiagram p;
            for (const auto c : chosen) p.components.push_back(comps[c]);
            std::sort(p.components.begin(), p.components.end(), component_less);
            out.push_back(std::move(p));
            pick(i + 1, blocked | closed[i]);
            chosen.pop_back();
        }
    };
    pick(0, 0);
    return out;
}

std::vector<ParabolicSubdiagram> maximal_parabolics(const DualGraph& g) {
    auto all = enumerate_parabolics(g);
    int best = 0;
    for (const auto& p : all) best = std::max(best, p.rank());
    std::vector<ParabolicSubdiagram> out;
    for (auto& p : all) {
        if (p.rank() == best) out.push_back(std::move(p));
    }
    return out;
}

std::vector<ParabolicSubdiagram> inclusion_maximal_parabolics(const DualGraph& g) {
    auto all = enumerate_parabolics(g);
    std::vector<std::uint64_t> masks;
    for (const auto& p : all) {
        std::uint64_t m = 0;
        for (const auto& c : p.components) m |= mask_of(c.vertices);
        masks.push_back(m);
    }
    std::vector<ParabolicSubdiagram> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < all.size() && maximal; ++j) {
            maximal = !(masks[j] != masks[i] && (masks[j] & masks[i]) == masks[i]);
        }
        if (maximal) out.push_back(all[i]);
    }
    return out;
}

std::vector<long> isotropic_class(const DualGraph& g, const std::vector<std::size_t>& component) {
    if (component.empty() || !g.connected(mask_of(component)) || !recognize_connected_parabolic(g, component))
        throw NotParabolic("component is not a connected parabolic subdiagram");
    auto m = negated_gram(g, component);
    const std::size_t n = m.size();
    // Reduced row echelon form; corank 1 leaves exactly one free column.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t r = row;
        while (r < n && m[r][col] == 0) ++r;
        if (r == n) continue;
        std::swap(m[r], m[row]);
        const mp::cpp_rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const mp::cpp_rational f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::size_t free_col = n;
    for (std::size_t c = 0; c < n && free_col == n; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
    }
    std::vector<mp::cpp_rational> v(n, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free_col];
    mp::cpp_int den = 1;
    for (const auto& x : v) den = mp::lcm(den, mp::denominator(x));
    std::vector<mp::cpp_int> w;
    mp::cpp_int gcd = 0;
    for (const auto& x : v) {
        w.push_back(mp::numerator(x) * (den / mp::denominator(x)));
        gcd = mp::gcd(gcd, w.back());
    }
    std::vector<long> out;
    const int sign = w[0] < 0 ? -1 : 1;
    for (const auto& x : w) out.push_back(static_cast<long>(x / gcd) * sign);
    return out;
}

bool multiple_fiber_test(const DualGraph& g, const ParabolicSubdiagram& parabolic, std::size_t component) {
    if (component >= parabolic.components.size()) throw NotParabolic("component index out of range");
    const auto& verts = parabolic.components[component].vertices;
    const auto marks = isotropic_class(g, verts);
    std::uint64_t inside = 0;
    for (const auto& c : parabolic.components) inside |= mask_of(c.vertices);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if ((inside >> v) & 1u) continue;
        long total = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) total += marks[i] * g.mult(v, verts[i]);
        if (total % 2 != 0) return true;
    }
    return false;
}

const std::vector<std::vector<KodairaType>>& kodaira_catalogue() {
    static const std::vector<std::vector<KodairaType>> catalogue = [] {
        const std::vector<std::vector<std::string>> text = {
            {"I3", "I3", "I3", "I3"}, {"I5", "I5"}, {"I9"}, {"I4*"}, {"II*"}, {"III", "I8"},
            {"I1*", "I4"}, {"III*", "I2"}, {"IV", "IV*"}, {"IV", "I2", "I6"}, {"IV*", "I3"}};
        std::vector<std::vector<KodairaType>> out;
        for (const auto& row : text) {
            std::vector<KodairaType> r;
            for (const auto& t : row) r.push_back(KodairaType::parse(t));
            out.push_back(std::move(r));
        }
        return out;
    }();
    return catalogue;
}

namespace {

std::vector<KodairaType> compatible_labels(const AffineType& t) {
    switch (t.family) {
        case 'A':
            if (t.n == 1) return {KodairaType::In(2), {KodairaFamily::III, 0}};
            if (t.n == 2) return {KodairaType::In(3), {KodairaFamily::IV, 0}};
            return {KodairaType::In(t.n + 1)};
        case 'D': return {KodairaType::InStar(t.n - 4)};
        case 'E':
            if (t.n == 6) return {{KodairaFamily::IVStar, 0}};
            if (t.n == 7) return {{KodairaFamily::IIIStar, 0}};
            return {{KodairaFamily::IIStar, 0}};
        default: return {};
    }
}

}  // namespace

std::vector<std::vector<KodairaType>> kodaira_assignments(const std::vector<AffineType>& types) {
    std::set<std::vector<KodairaType>> catalogue;
    for (auto row : kodaira_catalogue()) {
        std::sort(row.begin(), row.end());
        catalogue.insert(row);
    }
    std::vector<std::vector<KodairaType>> out;
    std::vector<KodairaType> current;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == types.size()) {
            auto sorted = current;
            std::sort(sorted.begin(), sorted.end());
            if (catalogue.count(sorted) != 0 && std::find(out.begin(), out.end(), current) == out.end())
                out.push_back(current);
            return;
        }
        for (const auto& k : compatible_labels(types[i])) {
            current.push_back(k);
            assign(i + 1);
            current.pop_back();
        }
    };
    assign(0);
    return out;
}

VinbergResult vinberg_check(const DualGraph& g) {
    const auto inv = config::lattice_invariants(g.gram());
    if (inv.n_plus > 1 || inv.rank > 10)
        throw DegenerateGraph("Gram signature (" + std::to_string(inv.n_plus) + ", " + std::to_string(inv.n_minus) +
                              ") does not embed in a lattice of signature (1, 9)");
    VinbergResult r{true, inv.rank == 10, false, inv.rank, {}, std::nullopt};
    const auto all = enumerate_parabolics(g);
    for (const auto& c : connected_parabolics(g)) {
        VinbergWitness w{c, std::nullopt};
        for (const auto& p : all) {
            if (p.rank() != 8) continue;
            const bool has = std::any_of(p.components.begin(), p.components.end(),
                                         [&](const ParabolicComponent& pc) { return pc.vertices == c.vertices; });
            if (has) {
                w.extension = p;
                break;
            }
        }
        if (!w.extension && r.criterion_holds) {
            r.criterion_holds = false;
            r.counterexample = c;
        }
        r.witnesses.push_back(std::move(w));
    }
    r.finite_index = r.criterion_holds && r.nondegenerate;
    return r;
}

}  // namespace enriques::dynkin
