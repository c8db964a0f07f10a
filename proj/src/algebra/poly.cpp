#include "enriques/algebra/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "enriques/errors.hpp"

namespace enriques::algebra {

// ---------------------------------------------------------------- registry

namespace {

struct Registry {
    std::mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, Var> index;

    Registry() {
        // Fixed start-up order: keeps printing and the monomial order
        // independent of which code path interns a name first.
        for (const char* n : {"t", "s", "x", "y", "z", "u", "v", "a", "b"}) add(n);
        for (char c = 'c'; c <= 'r'; ++c) {
            if (c != 's') add(std::string(1, c));
        }
        add("l");
        add("m");
        for (int i = 0; i <= 5; ++i) add("x" + std::to_string(i));
        for (const char* n : {"u0", "u1", "v0", "v1", "bp", "xp", "yp"}) add(n);
    }

    Var add(const std::string& name) {
        if (auto it = index.find(name); it != index.end()) return it->second;
        if (names.size() >= 255) throw InvalidParameter("too many distinct variables");
        const auto v = static_cast<Var>(names.size());
        names.push_back(name);
        index.emplace(name, v);
        return v;
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Var var(std::string_view name) {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return r.add(std::string(name));
}

const std::string& var_name(Var v) {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.at(v);
}

std::optional<Var> find_var(std::string_view name) {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    if (auto it = r.index.find(std::string(name)); it != r.index.end()) return it->second;
    return std::nullopt;
}

// ---------------------------------------------------------------- monomial

Monomial Monomial::of(Var v, unsigned exponent) {
    Monomial m;
    if (exponent > 0) m.push(v, exponent);
    return m;
}

void Monomial::push(Var v, unsigned e) {
    if (size_ >= kMaxVars) throw InvalidParameter("monomial has too many variables");
    if (e > 0xFFFF) throw InvalidParameter("exponent overflow");
    vars_[size_] = v;
    exps_[size_] = static_cast<std::uint16_t>(e);
    ++size_;
}

unsigned Monomial::degree(Var v) const noexcept {
    for (int i = 0; i < size_; ++i) {
        if (vars_[i] == v) return exps_[i];
    }
    return 0;
}

unsigned Monomial::total_degree() const noexcept {
    unsigned d = 0;
    for (int i = 0; i < size_; ++i) d += exps_[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    int i = 0, j = 0;
    while (i < size_ || j < o.size_) {
        if (j == o.size_ || (i < size_ && vars_[i] < o.vars_[j])) {
            r.push(vars_[i], exps_[i]);
            ++i;
        } else if (i == size_ || o.vars_[j] < vars_[i]) {
            r.push(o.vars_[j], o.exps_[j]);
            ++j;
        } else {
            r.push(vars_[i], unsigned(exps_[i]) + o.exps_[j]);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
    for (int i = 0; i < size_; ++i) {
        if (o.degree(vars_[i]) < exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial r;
    for (int i = 0; i < size_; ++i) {
        const unsigned d = divisor.degree(vars_[i]);
        if (d > exps_[i]) throw InconsistentData("monomial quotient is not exact");
        if (exps_[i] > d) r.push(vars_[i], exps_[i] - d);
    }
    for (int j = 0; j < divisor.size_; ++j) {
        if (degree(divisor.vars_[j]) == 0) throw InconsistentData("monomial quotient is not exact");
    }
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (int i = 0; i < size_; ++i) {
        if (vars_[i] != v) r.push(vars_[i], exps_[i]);
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < size_; ++i) {
        const unsigned e = std::min<unsigned>(exps_[i], o.degree(vars_[i]));
        if (e > 0) r.push(vars_[i], e);
    }
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    int i = 0, j = 0;
    while (i < a.size_ || j < b.size_) {
        if (j == b.size_ || (i < a.size_ && a.vars_[i] < b.vars_[j])) return std::strong_ordering::greater;
        if (i == a.size_ || b.vars_[j] < a.vars_[i]) return std::strong_ordering::less;
        if (a.exps_[i] != b.exps_[j]) return a.exps_[i] <=> b.exps_[j];
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.size_ != b.size_) return false;
    for (int i = 0; i < a.size_; ++i) {
        if (a.vars_[i] != b.vars_[i] || a.exps_[i] != b.exps_[i]) return false;
    }
    return true;
}

std::string Monomial::to_string() const {
    if (size_ == 0) return "1";
    std::string out;
    for (int i = 0; i < size_; ++i) {
        if (i) out += "*";
        out += var_name(vars_[i]);
        if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
    }
    return out;
}

// ---------------------------------------------------------------- poly

FiniteField common_field(const FiniteField& a, const FiniteField& b) {
    if (a == b) return a;
    if (a.is_prime()) return b;
    if (b.is_prime()) return a;
    throw FieldMismatch("polynomials over GF(2^" + std::to_string(a.degree()) + ") and GF(2^" +
                        std::to_string(b.degree()) + ")");
}

Poly Poly::constant(const FiniteField& f, Raw c) {
    Poly p(f);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

Poly Poly::variable(const FiniteField& f, Var v, unsigned exponent) {
    return monomial(f, 1, Monomial::of(v, exponent));
}

Poly Poly::monomial(const FiniteField& f, Raw c, const Monomial& m) {
    Poly p(f);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_unsorted(const FiniteField& f, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Poly p(f);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff ^= t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(t);
        }
    }
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Raw Poly::constant_term() const noexcept {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
    return terms_.front();
}

unsigned Poly::degree(Var v) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
    return d;
}

unsigned Poly::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::vector<Var> Poly::variables() const {
    std::vector<Var> vs;
    for (const auto& t : terms_) {
        for (int i = 0; i < t.mono.size(); ++i) vs.push_back(t.mono.var_at(i));
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Poly Poly::lifted(const FiniteField& target) const {
    if (field_ == target) return *this;
    if (!field_.is_prime()) {
        throw FieldMismatch("only GF(2) polynomials can be lifted to an extension");
    }
    Poly p = *this;
    p.field_ = target;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    const FiniteField f = common_field(field_, o.field_);
    Poly r(f);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            const Raw c = terms_[i].coeff ^ o.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    const FiniteField f = common_field(field_, o.field_);
    if (is_zero() || o.is_zero()) return Poly(f);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, f.mul(a.coeff, b.coeff)});
    }
    return from_unsorted(f, std::move(prod));
}

Poly Poly::scaled(Raw c) const {
    if (c == 0) return Poly(field_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = one(field_);
    Poly base = *this;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base.squared();
    }
    return result;
}

Poly Poly::squared() const {
    // (sum c_i m_i)^2 = sum c_i^2 m_i^2; squaring keeps the order strict.
    Poly r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * t.mono, field_.mul(t.coeff, t.coeff)});
    return r;
}

Poly Poly::derivative(Var v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const unsigned e = t.mono.degree(v);
        if (e % 2 == 0) continue;
        Monomial m = t.mono.without(v) * Monomial::of(v, e - 1);
        out.push_back({m, t.coeff});
    }
    return from_unsorted(field_, std::move(out));
}

Poly Poly::substitute(Var v, const Poly& value) const {
    const std::pair<Var, Poly> one_value{v, value};
    return substitute(std::span(&one_value, 1));
}

Poly Poly::substitute(std::span<const std::pair<Var, Poly>> values) const {
    FiniteField f = field_;
    for (const auto& [v, p] : values) f = common_field(f, p.field());
    // Cache powers per substituted variable.
    std::vector<std::vector<Poly>> powers(values.size());
    auto power = [&](std::size_t k, unsigned e) -> const Poly& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(one(f));
        while (cache.size() <= e) cache.push_back(cache.back() * values[k].second);
        return cache[e];
    };
    Poly result(f);
    for (const auto& t : terms_) {
        Monomial rest;
        Poly factor = constant(f, t.coeff);
        for (int i = 0; i < t.mono.size(); ++i) {
            const Var tv = t.mono.var_at(i);
            const unsigned e = t.mono.exp_at(i);
            std::size_t k = 0;
            while (k < values.size() && values[k].first != tv) ++k;
            if (k == values.size()) {
                rest = rest * Monomial::of(tv, e);
            } else {
                factor = factor * power(k, e);
            }
        }
        result += factor * monomial(f, 1, rest);
    }
    return result;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) buckets[t.mono.degree(v)].push_back({t.mono.without(v), t.coeff});
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_unsorted(field_, std::move(b)));
    return out;
}

Poly Poly::from_coefficients(const FiniteField& f, Var v, std::span<const Poly> coeffs) {
    std::vector<Term> all;
    FiniteField field = f;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        field = common_field(field, coeffs[i].field());
        for (const auto& t : coeffs[i].terms()) all.push_back({t.mono * Monomial::of(v, unsigned(i)), t.coeff});
    }
    return from_unsorted(field, std::move(all));
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FiniteField f = common_field(field_, divisor.field_);
    const Term& lead = divisor.leading_term();
    const Raw lead_inv = f.inv(lead.coeff);
    Poly rem = lifted(f);
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms_.front();
        if (!lead.mono.divides(lt.mono)) return std::nullopt;
        const Term q{lt.mono.quotient(lead.mono), f.mul(lt.coeff, lead_inv)};
        quotient.push_back(q);
        rem = rem + divisor * monomial(f, q.coeff, q.mono);
    }
    return from_unsorted(f, std::move(quotient));
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw InconsistentData("polynomial division is not exact");
    return *q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coeff()));
}

namespace {
std::string format_coeff(const FiniteField& f, Raw c, bool standalone) {
    std::string s = f.format(c);
    if (!standalone && s.find(' ') != std::string::npos) return "(" + s + ")";
    return s;
}
}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        if (t.mono.is_one()) {
            out += field_.format(t.coeff);
        } else if (t.coeff == 1) {
            out += t.mono.to_string();
        } else {
            out += format_coeff(field_, t.coeff, false) + "*" + t.mono.to_string();
        }
    }
    return out;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
    if (!(a.field_ == b.field_) && !a.field_.is_prime() && !b.field_.is_prime()) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

// ---------------------------------------------------------------- gcd

Poly pseudo_remainder(const Poly& a, const Poly& b, Var v) {
    const FiniteField f = common_field(a.field(), b.field());
    if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
    std::vector<Poly> A = a.coefficients_in(v);
    const std::vector<Poly> B = b.coefficients_in(v);
    const std::size_t db = B.size() - 1;
    const Poly& lcb = B.back();
    auto trim = [](std::vector<Poly>& c) {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    };
    trim(A);
    while (!A.empty() && A.size() - 1 >= db) {
        const Poly lca = A.back();
        const std::size_t shift = A.size() - 1 - db;
        for (auto& c : A) c = c * lcb;
        for (std::size_t i = 0; i <= db; ++i) A[i + shift] = A[i + shift] + lca * B[i];
        trim(A);
    }
    return Poly::from_coefficients(f, v, A);
}

namespace {

Poly univariate_gcd(Poly a, Poly b, Var v) {
    const FiniteField f = common_field(a.field(), b.field());
    a = a.lifted(f);
    b = b.lifted(f);
    while (!b.is_zero()) {
        const unsigned db = b.degree(v);
        const Raw lead_inv = f.inv(b.leading_coeff());
        while (!a.is_zero() && a.degree(v) >= db) {
            const unsigned shift = a.degree(v) - db;
            a = a + b * Poly::monomial(f, f.mul(a.leading_coeff(), lead_inv), Monomial::of(v, shift));
        }
        std::swap(a, b);
    }
    return a.monic();
}

Poly content_in(const Poly& p, Var v) {
    Poly c(p.field());
    for (const auto& coeff : p.coefficients_in(v)) {
        if (coeff.is_zero()) continue;
        c = gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

Poly primitive_part(const Poly& p, Var v) {
    if (p.is_zero()) return p;
    return p.divide_exact(content_in(p, v));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    const FiniteField f = common_field(a.field(), b.field());
    if (a.is_zero()) return b.lifted(f).monic();
    if (b.is_zero()) return a.lifted(f).monic();
    if (a.is_constant() || b.is_constant()) return Poly::one(f);

    std::vector<Var> vs = a.variables();
    for (Var v : b.variables()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    const Var v = vs.front();
    if (!a.involves(v)) return gcd(a, content_in(b, v));
    if (!b.involves(v)) return gcd(content_in(a, v), b);
    if (vs.size() == 1) return univariate_gcd(a, b, v);

    // Pull out the monomial gcd first; it keeps the PRS small.
    Monomial mg = a.terms()[0].mono;
    for (const auto& t : a.terms()) mg = mg.gcd(t.mono);
    for (const auto& t : b.terms()) mg = mg.gcd(t.mono);
    if (!mg.is_one()) {
        const Poly m = Poly::monomial(f, 1, mg);
        return (m * gcd(a.divide_exact(m), b.divide_exact(m))).monic();
    }

    const Poly ca = content_in(a, v);
    const Poly cb = content_in(b, v);
    const Poly c = gcd(ca, cb);
    Poly pa = a.divide_exact(ca);
    Poly pb = b.divide_exact(cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_part(r, v);
    }
    return (c * primitive_part(pa, v)).monic();
}

}  // namespace enriques::algebra
