#include <boost/multiprecision/cpp_int.hpp>

#include "enriques/config/curve_config.hpp"
#include "enriques/errors.hpp"

namespace enriques::config {

namespace mp = boost::multiprecision;

std::array<int, 3> signature(const IntMatrix& gram) {
    const std::size_t n = gram.size();
    std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
    }
    std::vector<bool> active(n, true);
    std::array<int, 3> sig{0, 0, 0};
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i) {
            if (active[i] && a[i][i] != 0) p = i;
        }
        if (p == n) {
            // Zero diagonal: use e_i <- e_i + e_j for some nonzero a[i][j],
            // which makes the new diagonal entry 2 a[i][j] != 0.
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (active[j] && j != i && a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) {
                sig[2] += static_cast<int>(remaining);
                break;
            }
            for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        const mp::cpp_rational piv = a[p][p];
        sig[piv > 0 ? 0 : 1] += 1;
        active[p] = false;
        --remaining;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || a[i][p] == 0) continue;
            const mp::cpp_rational f = a[i][p] / piv;
            for (std::size_t j = 0; j < n; ++j) {
                if (active[j]) a[i][j] -= f * a[p][j];
            }
        }
        for (std::size_t i = 0; i < n; ++i) a[i][p] = a[p][i] = 0;
    }
    return sig;
}

namespace {

std::vector<mp::cpp_int> smith_invariants(const IntMatrix& gram) {
    const std::size_t rows = gram.size();
    const std::size_t cols = rows == 0 ? 0 : gram[0].size();
    std::vector<std::vector<mp::cpp_int>> a(rows, std::vector<mp::cpp_int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = gram[i][j];
    }
    std::vector<mp::cpp_int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const mp::cpp_int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const mp::cpp_int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: pivot must divide the whole remaining block.
            for (std::size_t i = t + 1; i < rows && clean; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        clean = false;
                        break;
                    }
                }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace

LatticeInvariants lattice_invariants(const IntMatrix& gram) {
    for (const auto& row : gram) {
        if (row.size() != gram.size()) throw InvalidParameter("Gram matrix is not square");
    }
    const auto sig = signature(gram);
    const auto inv = smith_invariants(gram);
    LatticeInvariants r;
    r.n_plus = sig[0];
    r.n_minus = sig[1];
    r.n_zero = sig[2];
    r.rank = static_cast<int>(inv.size());
    if (r.rank != r.n_plus + r.n_minus) throw InconsistentData("rank and inertia disagree");
    mp::cpp_int det = 1;
    for (const auto& d : inv) {
        det *= d;
        r.smith_invariants.push_back(d.str());
    }
    if (r.n_minus % 2 == 1) det = -det;
    r.determinant = det.str();
    return r;
}

}  // namespace enriques::config
