#include "enriques/algebra/ratfunc.hpp"

#include <algorithm>
#include <map>

#include "enriques/errors.hpp"

namespace enriques::algebra {

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one(num_.field())) {}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    *this = make_reduced(std::move(num), std::move(den));
}

RatFunc RatFunc::make_reduced(Poly num, Poly den) {
    const FiniteField f = common_field(num.field(), den.field());
    num = num.lifted(f);
    den = den.lifted(f);
    if (num.is_zero()) return RatFunc(f);
    if (!den.is_constant()) {
        const Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = num.divide_exact(g);
            den = den.divide_exact(g);
        }
    }
    const Raw lead = den.leading_coeff();
    if (lead != 1) {
        const Raw inv = f.inv(lead);
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RatFunc(std::move(num), std::move(den), Reduced{});
}

std::vector<Var> RatFunc::variables() const {
    std::vector<Var> vs = num_.variables();
    for (Var v : den_.variables()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

RatFunc RatFunc::lifted(const FiniteField& target) const {
    return RatFunc(num_.lifted(target), den_.lifted(target), Reduced{});
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o.lifted(common_field(field(), o.field()));
    if (o.is_zero()) return lifted(common_field(field(), o.field()));
    if (den_ == o.den_) return make_reduced(num_ + o.num_, den_);
    // a/b + c/d over the lcm of b and d.
    const Poly g = gcd(den_, o.den_);
    const Poly bd = den_.divide_exact(g);
    const Poly dd = o.den_.divide_exact(g);
    return make_reduced(num_ * dd + o.num_ * bd, bd * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    const FiniteField f = common_field(field(), o.field());
    if (is_zero() || o.is_zero()) return RatFunc(f);
    if (is_polynomial() && o.is_polynomial()) return RatFunc(num_ * o.num_);
    // Cross-cancel first so the final gcd works on smaller inputs.
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    Poly n = num_.divide_exact(g1) * o.num_.divide_exact(g2);
    Poly d = den_.divide_exact(g2) * o.den_.divide_exact(g1);
    const Raw lead = d.leading_coeff();
    if (lead != 1) {
        const Raw inv = f.inv(lead);
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    return RatFunc(n.lifted(f), d.lifted(f), Reduced{});
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero function");
    const Raw lead = num_.leading_coeff();
    const Raw inv = field().inv(lead);
    return RatFunc(den_.scaled(inv), num_.scaled(inv), Reduced{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero function");
    return *this * o.inverse();
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    // gcd(n, d) = 1 implies gcd(n^e, d^e) = 1.
    return RatFunc(num_.pow(unsigned(e)), den_.pow(unsigned(e)), Reduced{});
}

RatFunc RatFunc::squared() const {
    return RatFunc(num_.squared(), den_.squared(), Reduced{});
}

RatFunc RatFunc::derivative(Var v) const {
    if (den_.is_one()) return RatFunc(num_.derivative(v));
    return make_reduced(num_.derivative(v) * den_ + num_ * den_.derivative(v), den_.squared());
}

namespace {

// Numerator of p(values) after multiplying through by prod den_k^{deg_k}.
Poly cleared_substitution(const Poly& p, std::span<const std::pair<Var, RatFunc>> values,
                          std::vector<unsigned>& degrees) {
    FiniteField f = p.field();
    for (const auto& [v, r] : values) f = common_field(f, r.field());
    degrees.assign(values.size(), 0);
    for (std::size_t k = 0; k < values.size(); ++k) degrees[k] = p.degree(values[k].first);

    std::vector<std::vector<Poly>> num_pow(values.size()), den_pow(values.size());
    auto power = [&](std::vector<Poly>& cache, const Poly& base, unsigned e) -> const Poly& {
        if (cache.empty()) cache.push_back(Poly::one(f));
        while (cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };

    // Group terms by the exponents of the substituted variables so each
    // product of powers is formed once.
    std::map<std::vector<unsigned>, std::vector<Term>> groups;
    for (const auto& t : p.terms()) {
        std::vector<unsigned> key(values.size());
        Monomial rest = t.mono;
        for (std::size_t k = 0; k < values.size(); ++k) {
            key[k] = t.mono.degree(values[k].first);
            rest = rest.without(values[k].first);
        }
        groups[key].push_back({rest, t.coeff});
    }
    Poly result(f);
    for (const auto& [key, terms] : groups) {
        Poly factor = Poly::one(f);
        for (std::size_t k = 0; k < values.size(); ++k) {
            const RatFunc& r = values[k].second;
            factor = factor * power(num_pow[k], r.num(), key[k]);
            if (!r.is_polynomial()) factor = factor * power(den_pow[k], r.den(), degrees[k] - key[k]);
        }
        Poly rest(f);
        for (const auto& t : terms) rest += Poly::monomial(f, t.coeff, t.mono);
        result += factor * rest;
    }
    return result;
}

Poly denominator_power(std::span<const std::pair<Var, RatFunc>> values, const std::vector<unsigned>& degrees,
                       const FiniteField& f) {
    Poly d = Poly::one(f);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!values[k].second.is_polynomial()) d = d * values[k].second.den().pow(degrees[k]);
    }
    return d;
}

}  // namespace

RatFunc substitute(const Poly& p, std::span<const std::pair<Var, RatFunc>> values) {
    std::vector<unsigned> degrees;
    Poly n = cleared_substitution(p, values, degrees);
    const FiniteField f = n.field();
    return RatFunc(std::move(n), denominator_power(values, degrees, f));
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
    const std::pair<Var, RatFunc> one_value{v, value};
    return substitute(std::span(&one_value, 1));
}

RatFunc RatFunc::substitute(std::span<const std::pair<Var, RatFunc>> values) const {
    std::vector<unsigned> dn, dd;
    Poly n = cleared_substitution(num_, values, dn);
    Poly d = cleared_substitution(den_, values, dd);
    const FiniteField f = common_field(n.field(), d.field());
    // n / prod D^dn  divided by  d / prod D^dd.
    std::vector<unsigned> extra_n(values.size()), extra_d(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (dd[k] >= dn[k]) {
            extra_n[k] = dd[k] - dn[k];
        } else {
            extra_d[k] = dn[k] - dd[k];
        }
    }
    n = n * denominator_power(values, extra_n, f);
    d = d * denominator_power(values, extra_d, f);
    if (d.is_zero()) throw DivisionByZero("substitution makes the denominator vanish");
    return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const Poly& p) {
        const bool atom = p.term_count() == 1 && (p.terms()[0].coeff == 1 || p.terms()[0].mono.is_one());
        return atom ? p.to_string() : "(" + p.to_string() + ")";
    };
    // A product in the denominator needs parentheses: a/(x*y), not a/x*y.
    const std::string den = wrap(den_);
    return wrap(num_) + "/" + (den.find('*') != std::string::npos && den.front() != '(' ? "(" + den + ")" : den);
}

}  // namespace enriques::algebra
