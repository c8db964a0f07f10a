#include <algorithm>
#include <map>

#include "enriques/constructions/constructions.hpp"
#include "enriques/errors.hpp"
#include "linear.hpp"

namespace enriques::constructions {

using namespace algebra;

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::open: return "open";
    }
    return "?";
}

namespace detail {

int rank(std::vector<std::vector<Raw>> m, const FiniteField& f) {
    int r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(r);
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[static_cast<std::size_t>(r)]);
        const auto& pivot = m[static_cast<std::size_t>(r)];
        const Raw inv = f.inv(pivot[c]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
            const Raw factor = f.mul(m[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) m[i][j] ^= f.mul(factor, pivot[j]);
        }
        ++r;
    }
    return r;
}

std::vector<Raw> kernel_vector(std::vector<std::vector<Raw>> m, const FiniteField& f) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Raw inv = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Raw factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= f.mul(factor, m[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Raw> v(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = m[i][c];
        return v;
    }
    return {};
}

Raw evaluate(const Poly& p, const FiniteField& f, const std::vector<std::pair<Var, Raw>>& point) {
    std::vector<std::pair<Var, Poly>> values;
    for (const auto& [v, r] : point) values.emplace_back(v, Poly::constant(f, r));
    const Poly q = p.lifted(common_field(p.field(), f)).substitute(values);
    if (!q.is_constant()) throw InvalidParameter("evaluation left free variables: " + q.to_string());
    return q.constant_term();
}

}  // namespace detail

unsigned root_multiplicity(const Poly& form, Var s, Var r, Raw a, Raw b) {
    if (form.is_zero()) throw InvalidParameter("root multiplicity of the zero form");
    const FiniteField f = form.field();
    const Poly line = Poly::variable(f, s) * Poly::constant(f, b) + Poly::variable(f, r) * Poly::constant(f, a);
    unsigned e = 0;
    Poly rest = form;
    while (auto q = rest.try_divide(line)) {
        rest = std::move(*q);
        ++e;
    }
    return e;
}

namespace {

void monomials_up_to(const std::vector<Var>& vars, std::size_t i, int budget, const Monomial& current,
                     std::vector<Monomial>& out) {
    if (i == vars.size()) {
        out.push_back(current);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        const Monomial next = e == 0 ? current : current * Monomial::of(vars[i], static_cast<unsigned>(e));
        monomials_up_to(vars, i + 1, budget - e, next, out);
    }
}

}  // namespace

int isolated_singularity_exponent(const Poly& g, const std::vector<Var>& vars, int max_n) {
    const FiniteField f = g.field();
    std::vector<Poly> gens{g};
    for (const auto v : vars) gens.push_back(g.derivative(v));
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Monomial> monos;
        monomials_up_to(vars, 0, n, Monomial(), monos);
        std::map<Monomial, std::size_t> column;
        for (const auto& m : monos) column.emplace(m, column.size());
        auto row_of = [&](const Poly& p) {
            std::vector<Raw> row(column.size(), 0);
            for (const auto& term : p.terms()) {
                if (static_cast<int>(term.mono.total_degree()) <= n) row[column.at(term.mono)] = term.coeff;
            }
            return row;
        };
        std::vector<std::vector<Raw>> rows;
        for (const auto& gen : gens) {
            if (gen.is_zero()) continue;
            for (const auto& m : monos) rows.push_back(row_of(Poly::monomial(f, 1, m) * gen));
        }
        const int base = detail::rank(rows, f);
        bool contained = true;
        for (const auto& m : monos) {
            if (static_cast<int>(m.total_degree()) != n) continue;
            auto extended = rows;
            extended.push_back(row_of(Poly::monomial(f, 1, m)));
            if (detail::rank(extended, f) != base) {
                contained = false;
                break;
            }
        }
        if (contained) return n;
    }
    return 0;
}

QuadraticSingularity quadratic_singularity(const Poly& g, const std::vector<Var>& vars) {
    const FiniteField f = g.field();
    std::vector<std::pair<Var, Raw>> origin;
    for (const auto v : vars) origin.emplace_back(v, 0);
    QuadraticSingularity out{detail::evaluate(g, f, origin) == 0, 0, false};
    for (const auto v : vars) out.singular = out.singular && detail::evaluate(g.derivative(v), f, origin) == 0;
    const std::size_t n = vars.size();
    std::vector<std::vector<Raw>> polar(n, std::vector<Raw>(n, 0));
    std::vector<Raw> square(n, 0);
    auto index = [&](Var v) { return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin()); };
    for (const auto& term : g.terms()) {
        if (term.mono.total_degree() != 2) continue;
        if (term.mono.size() == 1) {
            square[index(term.mono.var_at(0))] = term.coeff;
        } else {
            const auto i = index(term.mono.var_at(0)), j = index(term.mono.var_at(1));
            polar[i][j] = polar[j][i] = term.coeff;
        }
    }
    out.polar_rank = detail::rank(polar, f);
    if (n % 2 == 0) {
        out.nondegenerate = out.polar_rank == static_cast<int>(n);
    } else if (out.polar_rank == static_cast<int>(n) - 1) {
        const auto k = detail::kernel_vector(polar, f);
        Raw q = 0;
        for (std::size_t i = 0; i < n; ++i) {
            q ^= f.mul(square[i], f.mul(k[i], k[i]));
            for (std::size_t j = i + 1; j < n; ++j) q ^= f.mul(polar[i][j], f.mul(k[i], k[j]));
        }
        out.nondegenerate = q != 0;
    }
    return out;
}

}  // namespace enriques::constructions
