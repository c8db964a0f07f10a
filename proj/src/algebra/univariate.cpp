#include "enriques/algebra/univariate.hpp"

#include <algorithm>
#include <random>

#include "enriques/errors.hpp"

namespace enriques::algebra {

namespace {

// Dense univariate polynomials, coefficient i at index i, no trailing zeros.
using Dense = std::vector<Raw>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

Dense add(const Dense& a, const Dense& b) {
    Dense r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    trim(r);
    return r;
}

Dense mul(const FiniteField& f, const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= f.mul(a[i], b[j]);
    }
    trim(r);
    return r;
}

// Quotient and remainder; b nonzero.
std::pair<Dense, Dense> divmod(const FiniteField& f, Dense a, const Dense& b) {
    const int db = deg(b);
    const Raw inv = f.inv(b.back());
    Dense q(std::max(0, deg(a) - db + 1), 0);
    while (deg(a) >= db) {
        const int shift = deg(a) - db;
        const Raw c = f.mul(a.back(), inv);
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[i + shift] ^= f.mul(c, b[i]);
        trim(a);
    }
    return {q, a};
}

Dense mod(const FiniteField& f, const Dense& a, const Dense& b) { return divmod(f, a, b).second; }

Dense monic(const FiniteField& f, Dense a) {
    if (a.empty() || a.back() == 1) return a;
    const Raw inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
    return a;
}

Dense gcd(const FiniteField& f, Dense a, Dense b) {
    while (!b.empty()) {
        Dense r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

Dense derivative(const Dense& a) {
    Dense r(a.size() > 1 ? a.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < a.size(); i += 2) r[i - 1] = a[i];
    trim(r);
    return r;
}

Dense mulmod(const FiniteField& f, const Dense& a, const Dense& b, const Dense& m) {
    return mod(f, mul(f, a, b), m);
}

Dense square_mod(const FiniteField& f, const Dense& a, const Dense& m) { return mulmod(f, a, a, m); }

// p = h^2 in characteristic 2: h has coefficient sqrt(p_{2i}) at i.
Dense frobenius_root(const FiniteField& f, const Dense& p) {
    Dense h((p.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < p.size(); i += 2) h[i / 2] = f.sqrt(p[i]);
    trim(h);
    return h;
}

bool is_one(const Dense& a) { return a.size() == 1 && a[0] == 1; }

// (squarefree factor, multiplicity) pairs, product = monic(p).
void squarefree(const FiniteField& f, const Dense& p, unsigned scale, std::vector<std::pair<Dense, unsigned>>& out) {
    if (deg(p) <= 0) return;
    const Dense dp = derivative(p);
    if (dp.empty()) {
        squarefree(f, frobenius_root(f, p), scale * 2, out);
        return;
    }
    Dense c = gcd(f, p, dp);
    Dense w = divmod(f, p, c).first;
    unsigned i = 1;
    while (!is_one(w)) {
        Dense y = gcd(f, w, c);
        Dense fac = divmod(f, w, y).first;
        if (deg(fac) > 0) out.emplace_back(monic(f, fac), i * scale);
        ++i;
        w = std::move(y);
        c = divmod(f, c, w).first;
    }
    if (deg(c) > 0) squarefree(f, frobenius_root(f, c), scale * 2, out);
}

// x^(q^i) mod m by repeated squaring of the Frobenius (q = 2^k).
Dense frobenius_power(const FiniteField& f, const Dense& a, unsigned times, const Dense& m) {
    Dense r = a;
    for (unsigned s = 0; s < times; ++s) r = square_mod(f, r, m);
    return r;
}

// Splits a squarefree monic product of irreducibles of equal degree d.
void equal_degree(const FiniteField& f, const Dense& g, int d, std::mt19937& rng, std::vector<Dense>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    const unsigned trace_len = static_cast<unsigned>(f.degree() * d);
    std::uniform_int_distribution<unsigned> coeff(0, f.size() - 1);
    for (;;) {
        Dense a(deg(g), 0);
        for (auto& c : a) c = static_cast<Raw>(coeff(rng));
        trim(a);
        if (deg(a) <= 0) continue;
        // T(a) = a + a^2 + ... + a^(2^(kd-1)) mod g.
        Dense t = a, term = a;
        for (unsigned s = 1; s < trace_len; ++s) {
            term = square_mod(f, term, g);
            t = add(t, term);
        }
        Dense h = gcd(f, g, t);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            equal_degree(f, h, d, rng, out);
            equal_degree(f, divmod(f, g, h).first, d, rng, out);
            return;
        }
    }
}

std::vector<Dense> split_squarefree(const FiniteField& f, Dense p, std::mt19937& rng) {
    std::vector<Dense> out;
    const Dense x{0, 1};
    Dense h = mod(f, x, p);
    for (int i = 1; deg(p) >= 2 * i; ++i) {
        h = frobenius_power(f, h, static_cast<unsigned>(f.degree()), p);
        Dense g = gcd(f, p, add(h, mod(f, x, p)));
        if (deg(g) > 0) {
            equal_degree(f, g, i, rng, out);
            p = divmod(f, p, g).first;
            h = mod(f, h, p);
        }
    }
    if (deg(p) > 0) out.push_back(monic(f, p));
    return out;
}

struct Univariate {
    Var var;
    Dense coeffs;
};

Univariate to_dense(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    const auto vs = p.variables();
    if (vs.size() > 1) throw InvalidParameter("polynomial is not univariate: " + p.to_string());
    Univariate u{vs.empty() ? var("t") : vs.front(), {}};
    u.coeffs.assign(p.degree(u.var) + 1, 0);
    for (const auto& t : p.terms()) u.coeffs[t.mono.degree(u.var)] = t.coeff;
    return u;
}

Poly from_dense(const FiniteField& f, Var v, const Dense& d) {
    Poly p(f);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != 0) p += Poly::monomial(f, d[i], Monomial::of(v, unsigned(i)));
    }
    return p;
}

bool factor_less(const Factor& a, const Factor& b) {
    const Var v = a.factor.variables().front();
    const unsigned da = a.factor.degree(v), db = b.factor.degree(v);
    if (da != db) return da < db;
    const auto ta = a.factor.terms(), tb = b.factor.terms();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                        [](const Term& x, const Term& y) {
                                            if (!(x.mono == y.mono)) return x.mono > y.mono;
                                            return x.coeff < y.coeff;
                                        });
}

std::vector<Factor> collect(const FiniteField& f, Var v, std::vector<std::pair<Dense, unsigned>> pieces) {
    std::vector<Factor> out;
    for (auto& [d, m] : pieces) {
        Poly p = from_dense(f, v, d);
        auto it = std::find_if(out.begin(), out.end(), [&](const Factor& x) { return x.factor == p; });
        if (it == out.end()) {
            out.push_back({p, m});
        } else {
            it->multiplicity += m;
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

}  // namespace

std::vector<Factor> factor_univariate(const Poly& p) {
    const FiniteField& f = p.field();
    const Univariate u = to_dense(p);
    std::vector<std::pair<Dense, unsigned>> sqf;
    squarefree(f, monic(f, u.coeffs), 1, sqf);
    std::mt19937 rng(0x5eed);
    std::vector<std::pair<Dense, unsigned>> pieces;
    for (auto& [g, m] : sqf) {
        for (auto& irr : split_squarefree(f, g, rng)) pieces.emplace_back(monic(f, irr), m);
    }
    return collect(f, u.var, std::move(pieces));
}

std::vector<Factor> factor_by_trial_division(const Poly& p) {
    const FiniteField& f = p.field();
    const Univariate u = to_dense(p);
    Dense rest = monic(f, u.coeffs);
    std::vector<std::pair<Dense, unsigned>> pieces;
    // Enumerate monic candidates of increasing degree; every candidate that
    // divides is irreducible because its smaller factors were removed.
    for (int d = 1; 2 * d <= deg(rest); ++d) {
        std::vector<unsigned> digits(d, 0);
        for (;;) {
            Dense cand(d + 1, 0);
            for (int i = 0; i < d; ++i) cand[i] = static_cast<Raw>(digits[i]);
            cand[d] = 1;
            for (;;) {
                auto [q, r] = divmod(f, rest, cand);
                if (!r.empty()) break;
                pieces.emplace_back(cand, 1);
                rest = std::move(q);
            }
            int i = 0;
            while (i < d && ++digits[i] == f.size()) digits[i++] = 0;
            if (i == d) break;
        }
    }
    if (deg(rest) > 0) pieces.emplace_back(rest, 1);
    return collect(f, u.var, std::move(pieces));
}

bool is_irreducible(const Poly& p) {
    if (p.is_zero() || p.is_constant() || p.variables().size() != 1) return false;
    const auto fs = factor_univariate(p);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<Raw> roots_in_field(const Poly& p) {
    const Univariate u = to_dense(p);
    std::vector<Raw> roots;
    for (Raw c : p.field().elements()) {
        Raw acc = 0;
        for (auto it = u.coeffs.rbegin(); it != u.coeffs.rend(); ++it) acc = p.field().mul(acc, c) ^ *it;
        if (acc == 0) roots.push_back(c);
    }
    return roots;
}

// ---------------------------------------------------------------- places

Place Place::finite(const Poly& p) {
    const auto vs = p.variables();
    if (vs.size() != 1 || p.leading_coeff() != 1 || !is_irreducible(p)) {
        throw NotIrreducible("place polynomial must be monic irreducible: " + p.to_string());
    }
    return Place(vs.front(), p);
}

Place Place::at(const FiniteField& f, Var x, Raw c) {
    return Place(x, Poly::variable(f, x) + Poly::constant(f, c));
}

Place Place::infinity(Var x) { return Place(x, std::nullopt); }

const Poly& Place::poly() const {
    if (!poly_) throw InvalidParameter("the place at infinity has no polynomial");
    return *poly_;
}

unsigned Place::degree() const noexcept { return poly_ ? poly_->degree(var_) : 1; }

std::string Place::to_string() const {
    if (!poly_) return var_name(var_) + " = inf";
    return poly_->to_string();
}

int valuation(const Poly& f, const Place& place) {
    if (f.is_zero()) throw ZeroFunction("valuation of the zero function");
    if (place.is_infinity()) return -static_cast<int>(f.degree(place.variable()));
    int v = 0;
    Poly rest = f;
    while (auto q = rest.try_divide(place.poly())) {
        rest = std::move(*q);
        ++v;
    }
    return v;
}

int valuation(const RatFunc& f, const Place& place) {
    if (f.is_zero()) throw ZeroFunction("valuation of the zero function");
    return valuation(f.num(), place) - valuation(f.den(), place);
}

std::vector<Place> finite_support(const RatFunc& f, Var x) {
    std::vector<Place> out;
    for (const Poly* p : {&f.num(), &f.den()}) {
        if (p->is_constant()) continue;
        if (p->variables().size() != 1 || !p->involves(x)) {
            throw InvalidParameter("finite_support needs a function of " + var_name(x) + " only");
        }
        for (auto& fac : factor_univariate(*p)) out.push_back(Place::finite(fac.factor));
    }
    return out;
}

}  // namespace enriques::algebra

namespace enriques::algebra {

namespace {

Dense dense_in(const Poly& p, Var v) {
    if (p.is_zero()) return {};
    for (Var w : p.variables()) {
        if (w != v) throw InvalidParameter("expected a polynomial in " + var_name(v) + ": " + p.to_string());
    }
    Dense d(p.degree(v) + 1, 0);
    for (const auto& t : p.terms()) d[t.mono.degree(v)] = t.coeff;
    return d;
}

}  // namespace

ResidueField::ResidueField(const Place& place)
    : place_(place), bits_(0) {
    if (place.is_infinity()) throw InvalidParameter("residue field at infinity: use the local chart");
    bits_ = place.degree() * static_cast<unsigned>(place.poly().field().degree());
}

Poly ResidueField::reduce(const Poly& p) const {
    const FiniteField f = common_field(p.field(), place_.poly().field());
    const Var v = place_.variable();
    return from_dense(f, v, mod(f, dense_in(p.lifted(f), v), dense_in(place_.poly().lifted(f), v)));
}

Poly ResidueField::reduce(const RatFunc& r) const {
    const Poly d = reduce(r.den());
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at " + place_.to_string());
    return mul(reduce(r.num()), inverse(d));
}

Poly ResidueField::mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

Poly ResidueField::inverse(const Poly& a) const {
    const Poly r = reduce(a);
    if (r.is_zero()) throw DivisionByZero("inverse of zero in a residue field");
    // a^(|F| - 2) by square-and-multiply over the exponent 2^bits - 2.
    Poly result = Poly::one(r.field());
    Poly base = r;
    for (unsigned i = 0; i < bits_; ++i) {
        if (i > 0) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

Poly ResidueField::sqrt(const Poly& a) const {
    // sqrt(z) = z^(2^(bits-1)).
    Poly r = reduce(a);
    for (unsigned i = 1; i < bits_; ++i) r = mul(r, r);
    return r;
}

}  // namespace enriques::algebra
