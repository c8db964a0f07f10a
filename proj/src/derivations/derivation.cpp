#include "enriques/derivations/derivation.hpp"

#include <algorithm>

#include "enriques/algebra/parse.hpp"
#include "enriques/algebra/univariate.hpp"
#include "enriques/errors.hpp"

namespace enriques::derivations {

using algebra::Raw;

// ---------------------------------------------------------------- context

ParamContext ParamContext::symbolic() { return ParamContext(FiniteField::gf2(), std::nullopt); }

ParamContext ParamContext::specialized(const FiniteField& f, Raw a) {
    if (!f.contains(a)) throw InvalidParameter("parameter is not an element of the field");
    if (a != 0 && f.pow(a, 3) == 1) {
        throw InvalidParameter("a = " + f.format(a) + " satisfies a^3 = 1");
    }
    return ParamContext(f, a);
}

RatFunc ParamContext::a() const {
    if (!value_) return RatFunc::variable(field_, "a");
    return RatFunc::constant(field_, *value_);
}

RatFunc ParamContext::b() const {
    const RatFunc a_ = a();
    if (value_ && *value_ == 0) return RatFunc(field_);
    return a_ / (a_ + RatFunc::one(field_));
}

RatFunc ParamContext::resolve(const RatFunc& f) const {
    const Var va = algebra::var("a"), vb = algebra::var("b");
    if (!f.involves(vb) && (is_symbolic() || !f.involves(va))) return f.lifted(algebra::common_field(f.field(), field_));
    std::vector<std::pair<Var, RatFunc>> values{{vb, b()}};
    if (!is_symbolic()) values.emplace_back(va, a());
    return f.substitute(values);
}

std::string ParamContext::to_string() const {
    if (!value_) return "symbolic";
    return "a = " + field_.format(*value_) + " in GF(2^" + std::to_string(field_.degree()) + ")";
}

// ---------------------------------------------------------------- derivation

Derivation::Derivation(const RatFunc& coeff_t, const RatFunc& coeff_x, ParamContext ctx)
    : coeff_t_(ctx.resolve(coeff_t)), coeff_x_(ctx.resolve(coeff_x)), ctx_(ctx) {}

RatFunc Derivation::apply(const RatFunc& f) const {
    const RatFunc g = ctx_.resolve(f);
    return coeff_t_ * g.derivative(algebra::var("t")) + coeff_x_ * g.derivative(algebra::var("x"));
}

Derivation Derivation::scaled(const RatFunc& c) const {
    return Derivation(ctx_.resolve(c) * coeff_t_, ctx_.resolve(c) * coeff_x_, ctx_);
}

std::optional<RatFunc> p_closure_multiplier(const Derivation& d) {
    // In characteristic 2, D^2 is again a derivation, and so is h D. Two
    // derivations of k(t, x) agree iff they agree on t and x, so comparing
    // D^2(t), D^2(x) with h D(t), h D(x) decides D^2 = h D everywhere.
    const RatFunc& dt = d.coeff_t();
    const RatFunc& dx = d.coeff_x();
    const RatFunc d2t = d.apply(dt);
    const RatFunc d2x = d.apply(dx);
    RatFunc h(dt.field());
    if (!dt.is_zero()) {
        h = d2t / dt;
    } else if (!dx.is_zero()) {
        h = d2x / dx;
    }
    if (d2t == h * dt && d2x == h * dx) return h;
    return std::nullopt;
}

std::string to_string(VectorFieldType t) { return t == VectorFieldType::additive ? "additive" : "multiplicative"; }

VectorFieldType vector_field_type(const Derivation& d) {
    const auto h = p_closure_multiplier(d);
    if (!h) throw NotPClosed("derivation is not 2-closed");
    return h->is_zero() ? VectorFieldType::additive : VectorFieldType::multiplicative;
}

// ---------------------------------------------------------------- integral fibers

namespace {

// All monic divisors of a univariate polynomial in `v` (the unit is dropped).
std::vector<Poly> monic_divisors(const Poly& p) {
    std::vector<Poly> out{Poly::one(p.field())};
    if (p.is_constant()) return out;
    for (const auto& f : algebra::factor_univariate(p)) {
        const std::size_t n = out.size();
        Poly power = Poly::one(p.field());
        for (unsigned e = 1; e <= f.multiplicity; ++e) {
            power = power * f.factor;
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

}  // namespace

IntegralFibers integral_fiber_places(const Derivation& d) {
    IntegralFibers out;
    if (d.coeff_t().is_zero()) {
        out.all = true;
        return out;
    }
    const Var t = algebra::var("t");
    Poly n = d.coeff_t().num();
    const FiniteField f = n.field();
    if (!n.involves(t)) return out;
    std::vector<Var> params;
    for (Var v : n.variables()) {
        if (v != t) params.push_back(v);
    }
    if (params.size() > 1) throw InvalidParameter("integral fibers: more than one parameter in " + n.to_string());

    if (params.empty()) {
        for (const auto& fac : algebra::factor_univariate(n)) {
            if (fac.factor.degree(t) == 1) {
                out.rational.push_back({RatFunc(Poly::constant(f, fac.factor.constant_term())), fac.multiplicity});
            } else {
                out.other.emplace_back(fac.factor, fac.multiplicity);
            }
        }
    } else {
        // Rational roots p/q of n in K(a): (q t + p) | n with q | lead, p | const.
        Poly rest = n;
        unsigned zero_mult = 0;
        const Poly tt = Poly::variable(f, t);
        while (auto quo = rest.try_divide(tt)) {
            rest = std::move(*quo);
            ++zero_mult;
        }
        if (zero_mult > 0) out.rational.push_back({RatFunc(f), zero_mult});
        const auto coeffs = rest.coefficients_in(t);
        const auto ps = monic_divisors(coeffs.front());
        const auto qs = monic_divisors(coeffs.back());
        for (const auto& q : qs) {
            for (const auto& p0 : ps) {
                for (Raw unit : f.elements()) {
                    if (unit == 0) continue;
                    const Poly lin = q * tt + p0.scaled(unit);
                    unsigned mult = 0;
                    while (auto quo = rest.try_divide(lin)) {
                        rest = std::move(*quo);
                        ++mult;
                    }
                    if (mult > 0) out.rational.push_back({RatFunc(p0.scaled(unit), q), mult});
                }
            }
        }
        if (rest.involves(t)) out.other.emplace_back(rest, 1);
    }
    std::sort(out.rational.begin(), out.rational.end(),
              [](const FiberLocus& x, const FiberLocus& y) { return x.root.to_string() < y.root.to_string(); });
    return out;
}

// ---------------------------------------------------------------- bookkeeping

std::string to_string(EulerVerdict v) {
    switch (v) {
        case EulerVerdict::divisorial: return "divisorial";
        case EulerVerdict::isolated_zeros: return "isolated zeros present";
        case EulerVerdict::inconsistent: return "inconsistent";
    }
    return "?";
}

EulerBookkeeping euler_bookkeeping(long c2, long d_square, long k_dot_d) {
    const long deg = c2 + k_dot_d + d_square;
    const EulerVerdict v = deg == 0 ? EulerVerdict::divisorial
                           : deg > 0 ? EulerVerdict::isolated_zeros
                                     : EulerVerdict::inconsistent;
    return {deg, v};
}

DivisorCombination divisorial_part_D() {
    DivisorCombination d;
    for (const char* n : {"F1", "E1_2", "E1_4", "E1_6", "E1_8", "Finf", "Einf_2", "Einf_4", "Einf_6", "Einf_8", "Ew",
                          "Ew2"}) {
        d[n] = -1;
    }
    return d;
}

DivisorCombination divisorial_part_Dprime() {
    DivisorCombination d;
    for (int i = 1; i <= 9; i += 2) {
        d["E1_" + std::to_string(i)] += 1;
        d["Einf_" + std::to_string(i)] += 1;
    }
    d["Ew"] -= 1;
    d["Ew2"] -= 1;
    d["Finf"] -= 2;
    for (int i = 1; i <= 9; ++i) d["Einf_" + std::to_string(i)] -= 2;
    return d;
}

Derivation derivation_Dprime(const ParamContext& ctx) {
    const FiniteField& f = ctx.field();
    return Derivation(algebra::parse_ratfunc("(t+1)*(t+a)*(t+b)", f), algebra::parse_ratfunc("1 + t^2*x", f), ctx);
}

Derivation derivation_D(const ParamContext& ctx) {
    const FiniteField& f = ctx.field();
    return derivation_Dprime(ctx).scaled(algebra::parse_ratfunc("1/(t+1)", f));
}

Derivation builtin_derivation(const std::string& name, const ParamContext& ctx) {
    if (name == "Dprime") return derivation_Dprime(ctx);
    if (name == "D") return derivation_D(ctx);
    throw UnknownBuiltin("unknown derivation '" + name + "'");
}

}  // namespace enriques::derivations
