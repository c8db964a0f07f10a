#include "enriques/weierstrass/curve.hpp"

#include <algorithm>
#include <numeric>

#include "enriques/algebra/parse.hpp"
#include "enriques/errors.hpp"

namespace enriques::weierstrass {

using algebra::Raw;
using algebra::ResidueField;

namespace {

RatFunc constant(const FiniteField& f, Raw c) { return RatFunc::constant(f, c); }

}  // namespace

WeierstrassCurve::WeierstrassCurve(const FiniteField& field, std::optional<Var> base, std::array<RatFunc, 5> a)
    : field_(field), base_(base), a_(std::move(a)) {
    for (auto& c : a_) {
        field_ = algebra::common_field(field_, c.field());
    }
    for (auto& c : a_) {
        c = c.lifted(field_);
        for (Var v : c.variables()) {
            if (!base_ || v != *base_) {
                throw InvalidParameter("curve coefficient " + c.to_string() + " involves " + algebra::var_name(v) +
                                       ", which is not the base variable");
            }
        }
    }
}

RatFunc WeierstrassCurve::residual(const RatFunc& x, const RatFunc& y) const {
    return y * y + a1() * x * y + a3() * y + x * x * x + a2() * x * x + a4() * x + a6();
}

WeierstrassCurve WeierstrassCurve::lifted(const FiniteField& f) const {
    std::array<RatFunc, 5> a = a_;
    for (auto& c : a) c = c.lifted(f);
    return WeierstrassCurve(f, base_, std::move(a));
}

std::string WeierstrassCurve::to_string() const {
    auto coeff_term = [](const RatFunc& c, const std::string& mono) -> std::string {
        if (c.is_zero()) return "";
        if (c.is_one()) return mono.empty() ? "1" : mono;
        std::string s = c.to_string();
        const bool simple = c.is_polynomial() && c.num().term_count() == 1;
        if (!simple) s = "(" + s + ")";
        return mono.empty() ? s : s + "*" + mono;
    };
    auto join = [](std::vector<std::string> parts) {
        std::string out;
        for (auto& p : parts) {
            if (p.empty()) continue;
            if (!out.empty()) out += " + ";
            out += p;
        }
        return out.empty() ? std::string("0") : out;
    };
    std::string lhs = join({"y^2", coeff_term(a1(), "x*y"), coeff_term(a3(), "y")});
    std::string rhs = join({"x^3", coeff_term(a2(), "x^2"), coeff_term(a4(), "x"), coeff_term(a6(), "")});
    return lhs + " = " + rhs;
}

Invariants invariants(const WeierstrassCurve& c) {
    Invariants inv;
    inv.b2 = c.a1().squared();
    inv.b4 = c.a1() * c.a3();
    inv.b6 = c.a3().squared();
    inv.b8 = inv.b2 * c.a6() + c.a1() * c.a3() * c.a4() + c.a2() * inv.b6 + c.a4().squared();
    inv.delta = inv.b2.squared() * inv.b8 + inv.b6.squared() + inv.b2 * inv.b4 * inv.b6;
    inv.c4 = inv.b2.squared();
    if (inv.delta.is_zero()) throw SingularModel("discriminant vanishes: " + c.to_string());
    inv.j = inv.c4 * inv.c4 * inv.c4 / inv.delta;
    return inv;
}

std::string CurvePoint::to_string() const {
    if (infinity) return "inf";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p) {
    if (p.infinity) return true;
    algebra::common_field(curve.field(), p.x.field());
    algebra::common_field(curve.field(), p.y.field());
    return curve.residual(p.x, p.y).is_zero();
}

namespace {

void require_on(const WeierstrassCurve& curve, const CurvePoint& p) {
    if (!on_curve(curve, p)) throw PointNotOnCurve(p.to_string() + " is not on " + curve.to_string());
}

}  // namespace

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p) {
    require_on(curve, p);
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, p.y + curve.a1() * p.x + curve.a3());
}

CurvePoint add_points(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q) {
    require_on(curve, p);
    require_on(curve, q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    const auto& [a1, a2, a3, a4, a6] = curve.coefficients();
    RatFunc lambda, nu;
    if (p.x == q.x) {
        // Either Q = -P or Q = P.
        if ((p.y + q.y + a1 * p.x + a3).is_zero()) return CurvePoint::zero();
        const RatFunc den = a1 * p.x + a3;
        if (den.is_zero()) return CurvePoint::zero();
        lambda = (p.x * p.x + a4 + a1 * p.y) / den;
        nu = (p.x * p.x * p.x + a4 * p.x + a3 * p.y) / den;
    } else {
        const RatFunc dx = q.x + p.x;
        lambda = (q.y + p.y) / dx;
        nu = (p.y * q.x + q.y * p.x) / dx;
    }
    const RatFunc x3 = lambda * lambda + a1 * lambda + a2 + p.x + q.x;
    const RatFunc y3 = (lambda + a1) * x3 + nu + a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint mul_point(const WeierstrassCurve& curve, long n, const CurvePoint& p) {
    require_on(curve, p);
    CurvePoint base = n < 0 ? negate(curve, p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::zero();
    while (k != 0) {
        if (k & 1) acc = add_points(curve, acc, base);
        k >>= 1;
        if (k != 0) base = add_points(curve, base, base);
    }
    return acc;
}

std::optional<long> point_order(const WeierstrassCurve& curve, const CurvePoint& p, long bound) {
    CurvePoint acc = p;
    for (long n = 1; n <= bound; ++n) {
        if (acc.infinity) return n;
        acc = add_points(curve, acc, p);
    }
    return std::nullopt;
}

std::vector<CurvePoint> rational_points(const WeierstrassCurve& curve) {
    if (curve.base()) throw InvalidParameter("rational_points needs a curve over a finite field");
    const FiniteField& f = curve.field();
    std::array<Raw, 5> a{};
    for (int i = 0; i < 5; ++i) a[i] = curve.coefficients()[i].num().constant_term();
    std::vector<CurvePoint> pts{CurvePoint::zero()};
    for (Raw x : f.elements()) {
        for (Raw y : f.elements()) {
            const Raw lhs = f.mul(y, y) ^ f.mul(f.mul(a[0], x), y) ^ f.mul(a[2], y);
            const Raw rhs = f.mul(f.mul(x, x), x) ^ f.mul(a[1], f.mul(x, x)) ^ f.mul(a[3], x) ^ a[4];
            if (lhs == rhs) pts.push_back(CurvePoint::affine(constant(f, x), constant(f, y)));
        }
    }
    return pts;
}

std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::good: return "good";
        case Reduction::multiplicative: return "multiplicative";
        case Reduction::additive: return "additive";
    }
    return "?";
}

// ---------------------------------------------------------------- places

namespace {

Var chart_variable(const WeierstrassCurve& curve) {
    const Var u = algebra::var("u");
    if (curve.base() && *curve.base() == u) return algebra::var("uu");
    return u;
}

int valuation_or(const RatFunc& f, const Place& p, int if_zero) {
    return f.is_zero() ? if_zero : algebra::valuation(f, p);
}

// Node/cusp decision on the reduction of an integral model at a finite
// place: locate the singular point over the residue field and read the
// polar (XY) coefficient of the quadratic part there.
Reduction node_or_cusp(const WeierstrassCurve& curve, const Place& place) {
    const ResidueField k(place);
    std::array<Poly, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = k.reduce(curve.coefficients()[i]);
    const auto& [a1, a2, a3, a4, a6] = a;
    auto eq = [&](const Poly& x, const Poly& y) {
        return k.reduce(y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6);
    };
    Poly x0, y0;
    if (!a1.is_zero()) {
        // F_y = a1 x + a3 = 0, F_x = a1 y + x^2 + a4 = 0.
        const Poly inv = k.inverse(a1);
        x0 = k.mul(a3, inv);
        y0 = k.mul(k.reduce(x0 * x0 + a4), inv);
    } else {
        if (!a3.is_zero()) {
            throw InconsistentData("discriminant vanishes at " + place.to_string() + " but the fiber is smooth");
        }
        x0 = k.sqrt(a4);
        y0 = k.sqrt(k.reduce(x0 * x0 * x0 + a2 * x0 * x0 + a4 * x0 + a6));
    }
    if (!eq(x0, y0).is_zero()) {
        throw InconsistentData("no singular point on the reduction at " + place.to_string());
    }
    // Quadratic part at (x0, y0): Y^2 + a1 XY + (x0 + a2) X^2. It is a
    // product of two distinct lines iff its polar coefficient a1 is nonzero.
    return a1.is_zero() ? Reduction::additive : Reduction::multiplicative;
}

FiberReport finite_report(const WeierstrassCurve& curve, const Place& place, const Place& label) {
    for (const auto& c : curve.coefficients()) {
        if (!c.is_zero() && algebra::valuation(c, place) < 0) {
            throw NonMinimalModel("coefficients are not integral at " + label.to_string());
        }
    }
    const Invariants inv = invariants(curve);
    const int vd = algebra::valuation(inv.delta, place);
    const int vc4 = valuation_or(inv.c4, place, 1 << 20);
    if (vd >= 12 && vc4 >= 4) {
        throw NonMinimalModel("model is not minimal at " + label.to_string() + " (v(delta) = " + std::to_string(vd) +
                              ", v(c4) = " + std::to_string(std::min(vc4, 99)) + ")");
    }
    FiberReport r{label, vd, std::nullopt, Reduction::good, std::nullopt, label.degree()};
    if (!inv.j.is_zero()) r.v_j = algebra::valuation(inv.j, place);
    if (vd == 0) return r;
    r.reduction = node_or_cusp(curve, place);
    if (r.reduction == Reduction::multiplicative) r.kodaira = KodairaType::In(vd);
    return r;
}

}  // namespace

InfinityChart infinity_chart(const WeierstrassCurve& curve, Var u) {
    if (!curve.base()) throw InvalidParameter("infinity chart needs a curve over a function field");
    const Var t = *curve.base();
    const int weights[5] = {1, 2, 3, 4, 6};
    int m = 0;
    for (int i = 0; i < 5; ++i) {
        const RatFunc& c = curve.coefficients()[i];
        if (c.is_zero()) continue;
        const int pole = -algebra::valuation(c, Place::infinity(t));
        m = std::max(m, (pole + weights[i] - 1) / weights[i]);
    }
    const RatFunc inv_u = RatFunc::one(curve.field()) / RatFunc(Poly::variable(curve.field(), u));
    const RatFunc uu(Poly::variable(curve.field(), u));
    std::array<RatFunc, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = curve.coefficients()[i].substitute(t, inv_u) * uu.pow(weights[i] * m);
    return {WeierstrassCurve(curve.field(), u, std::move(a)), m};
}

FiberReport fiber_at(const WeierstrassCurve& curve, const Place& place) {
    if (!curve.base()) throw InvalidParameter("fiber analysis needs a curve over a function field");
    if (place.variable() != *curve.base()) {
        throw InvalidParameter("place " + place.to_string() + " is not a place of the base");
    }
    if (place.is_infinity()) {
        const Var u = chart_variable(curve);
        const InfinityChart chart = infinity_chart(curve, u);
        const FiniteField& f = chart.curve.field();
        return finite_report(chart.curve, Place::at(f, u, 0), place);
    }
    const FiniteField f = algebra::common_field(curve.field(), place.poly().field());
    return finite_report(curve.lifted(f), place, place);
}

std::vector<FiberReport> place_analysis(const WeierstrassCurve& curve, PlaceAnalysisOptions opts) {
    if (!curve.base()) throw InvalidParameter("place analysis needs a curve over a function field");
    const Var t = *curve.base();
    const Invariants inv = invariants(curve);
    std::vector<Place> places;
    for (const Poly* p : {&inv.delta.num(), &inv.delta.den()}) {
        if (p->is_constant()) continue;
        for (const auto& fac : algebra::factor_univariate(*p)) places.push_back(Place::finite(fac.factor));
    }
    if (opts.split && curve.field().is_prime()) {
        unsigned l = 1;
        for (const auto& p : places) l = std::lcm(l, p.degree());
        if (l > 1 && l <= unsigned(FiniteField::kMaxDegree)) {
            return place_analysis(curve.lifted(FiniteField::gf(int(l))), {false});
        }
    }
    std::vector<FiberReport> out;
    for (const auto& p : places) out.push_back(fiber_at(curve, p));
    std::stable_sort(out.begin(), out.end(), [](const FiberReport& x, const FiberReport& y) {
        return x.place.degree() < y.place.degree();
    });
    out.push_back(fiber_at(curve, Place::infinity(t)));
    return out;
}

std::vector<KodairaType> geometric_fibers(const std::vector<FiberReport>& reports) {
    std::vector<KodairaType> out;
    for (const auto& r : reports) {
        if (r.reduction == Reduction::good) continue;
        if (!r.kodaira) throw InvalidParameter("additive fiber at " + r.place.to_string() + " has no Kodaira label");
        for (unsigned i = 0; i < r.geometric_count; ++i) out.push_back(*r.kodaira);
    }
    return out;
}

WeierstrassCurve frobenius_base_change(const WeierstrassCurve& curve, Var s, Var t) {
    const RatFunc t2(Poly::variable(curve.field(), t, 2));
    std::array<RatFunc, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = curve.coefficients()[i].substitute(s, t2);
    return WeierstrassCurve(curve.field(), t, std::move(a));
}

RatFunc half_fiber_j(const RatFunc& a) {
    const FiniteField& f = a.field();
    const RatFunc one = RatFunc::one(f);
    const RatFunc j = a.pow(24) / ((a + one).pow(10) * (a * a + a + one).pow(2));
    return j.squared();
}

ShiodaTateReport shioda_tate_check(const std::vector<KodairaType>& fibers, long torsion_order, int picard_number) {
    if (torsion_order < 1) throw InvalidParameter("torsion order must be positive");
    ShiodaTateReport r{};
    r.picard_number = picard_number;
    r.trivial_lattice_rank = 2;
    r.discriminant_product = 1;
    r.torsion_order = torsion_order;
    for (const auto& k : fibers) {
        r.trivial_lattice_rank += k.components() - 1;
        r.discriminant_product *= k.discriminant();
    }
    r.mordell_weil_rank = picard_number - r.trivial_lattice_rank;
    if (r.mordell_weil_rank < 0) {
        throw InconsistentData("trivial lattice rank " + std::to_string(r.trivial_lattice_rank) +
                               " exceeds the Picard number " + std::to_string(picard_number));
    }
    const long t2 = torsion_order * torsion_order;
    r.torsion_consistent = r.discriminant_product % t2 == 0;
    if (r.torsion_consistent && r.mordell_weil_rank == 0) {
        long ratio = r.discriminant_product / t2;
        if (picard_number == kPicardRational) {
            r.torsion_consistent = ratio == 1;
        } else if (picard_number == kPicardSupersingularK3) {
            int e = 0;
            while (ratio % 4 == 0) {
                ratio /= 4;
                ++e;
            }
            r.torsion_consistent = ratio == 1 && e >= 1 && e <= 10;
            if (r.torsion_consistent) r.artin_invariant = e;
        }
    }
    return r;
}

// ---------------------------------------------------------------- built-ins

namespace {

RatFunc rf(const char* text, const FiniteField& f) { return algebra::parse_ratfunc(text, f); }

WeierstrassCurve make(const FiniteField& f, std::optional<const char*> base, const char* a1, const char* a2,
                      const char* a3, const char* a4, const char* a6) {
    std::optional<Var> b;
    if (base) b = algebra::var(*base);
    return WeierstrassCurve(f, b, {rf(a1, f), rf(a2, f), rf(a3, f), rf(a4, f), rf(a6, f)});
}

}  // namespace

WeierstrassCurve curve_E() { return make(FiniteField::gf4(), std::nullopt, "0", "1", "1", "0", "0"); }
WeierstrassCurve curve_R() { return make(FiniteField::gf2(), "s", "s", "1", "1", "0", "s"); }
WeierstrassCurve curve_Ystar() { return make(FiniteField::gf2(), "t", "t^2", "1", "1", "0", "t^2"); }
WeierstrassCurve curve_kummerEF() { return make(FiniteField::gf2(), "b", "1", "0", "0", "b", "0"); }

std::vector<std::string> builtin_curve_names() { return {"E", "R", "Ystar", "kummerEF"}; }

WeierstrassCurve builtin_curve(const std::string& name) {
    if (name == "E") return curve_E();
    if (name == "R") return curve_R();
    if (name == "Ystar") return curve_Ystar();
    if (name == "kummerEF") return curve_kummerEF();
    throw UnknownBuiltin("unknown curve '" + name + "'");
}

std::map<std::string, CurvePoint> ystar_sections() {
    const auto f = FiniteField::gf2();
    auto pt = [&](const char* x, const char* y) { return CurvePoint::affine(rf(x, f), rf(y, f)); };
    return {
        {"s0", CurvePoint::zero()},
        {"s1", pt("1", "t^2")},
        {"s2", pt("t^2", "t^2")},
        {"s3", pt("t^2", "t^4 + t^2 + 1")},
        {"s4", pt("1", "1")},
        {"m0", pt("1/t^2", "1/t^3 + 1/t^2 + t")},
        {"m1", pt("t^3 + t + 1", "t^4 + t^3 + t")},
        {"m2", pt("t", "t^3")},
        {"m3", pt("t", "1")},
        {"m4", pt("t^3 + t + 1", "t^5 + t^4 + t^2 + t + 1")},
    };
}

std::map<std::string, CurvePoint> e_points() {
    const auto f = FiniteField::gf4();
    auto pt = [&](Raw x, Raw y) { return CurvePoint::affine(constant(f, x), constant(f, y)); };
    return {{"P0", CurvePoint::zero()}, {"P1", pt(1, 0)}, {"P2", pt(0, 0)}, {"P3", pt(0, 1)}, {"P4", pt(1, 1)}};
}

}  // namespace enriques::weierstrass
