#include "doctest.h"
#include "enriques/algebra/parse.hpp"
#include "enriques/errors.hpp"
#include "enriques/weierstrass/curve.hpp"

using namespace enriques;
using namespace enriques::algebra;
using namespace enriques::weierstrass;

namespace {

RatFunc R(const char* s, const FiniteField& f = FiniteField::gf2()) { return parse_ratfunc(s, f); }

const FiberReport& at(const std::vector<FiberReport>& rs, const std::string& place) {
    for (const auto& r : rs) {
        if (r.place.to_string() == place) return r;
    }
    throw std::runtime_error("no report at " + place);
}

}  // namespace

TEST_SUITE("weierstrass") {

TEST_CASE("invariants of the three curves") {
    const auto y = invariants(curve_Ystar());
    CHECK(y.delta == R("(t+1)^10*(t^2+t+1)^2"));
    CHECK(y.delta == R("t^14 + t^8 + t^6 + 1"));
    CHECK(y.j == R("t^24/((t+1)^10*(t^2+t+1)^2)"));

    const auto e = invariants(curve_E());
    CHECK(e.delta.is_one());
    CHECK(e.j.is_zero());
    CHECK(e.b8.is_one());

    const auto r = invariants(curve_R());
    CHECK(r.delta == R("(s+1)^5*(s^2+s+1)"));
    const auto fs = factor_univariate(r.delta.num());
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].multiplicity == 5);

    for (const auto& c : {curve_E(), curve_R(), curve_Ystar(), curve_kummerEF()}) {
        const auto inv = invariants(c);
        CHECK(inv.j * inv.delta == inv.c4 * inv.c4 * inv.c4);
    }
    CHECK_THROWS_AS(invariants(WeierstrassCurve(FiniteField::gf2(), std::nullopt,
                                                {R("0"), R("0"), R("0"), R("0"), R("0")})),
                    SingularModel);
}

TEST_CASE("points on Ystar") {
    const auto c = curve_Ystar();
    const auto secs = ystar_sections();
    for (const auto& [name, p] : secs) {
        CAPTURE(name);
        CHECK(on_curve(c, p));
    }
    const CurvePoint origin = CurvePoint::affine(R("0"), R("0"));
    CHECK_FALSE(on_curve(c, origin));
    CHECK(c.residual(R("0"), R("0")) == R("t^2"));
    CHECK_THROWS_AS(add_points(c, origin, origin), PointNotOnCurve);
}

TEST_CASE("group law on the GF(4)-points of E") {
    const auto e = curve_E();
    const auto pts = rational_points(e);
    REQUIRE(pts.size() == 5);
    const auto named = e_points();
    const CurvePoint& p1 = named.at("P1");
    for (int i = 0; i <= 4; ++i) CHECK(mul_point(e, i, p1) == named.at("P" + std::to_string(i)));
    CHECK(mul_point(e, 5, p1).infinity);
    CHECK(add_points(e, p1, p1) == named.at("P2"));
    CHECK(mul_point(e, -1, p1) == named.at("P4"));
    for (const auto& p : pts) {
        CHECK(add_points(e, p, CurvePoint::zero()) == p);
        CHECK(add_points(e, p, negate(e, p)).infinity);
        for (const auto& q : pts) {
            CHECK(add_points(e, p, q) == add_points(e, q, p));
            for (const auto& r : pts) {
                CHECK(add_points(e, add_points(e, p, q), r) == add_points(e, p, add_points(e, q, r)));
            }
        }
    }
}

TEST_CASE("the explicit addition formula on E agrees with the generic law") {
    // x3 = x1 + x2 + l^2 + 1, y3 = y1 + y2 + l^3 + l + nu + 1 for the chord case.
    const auto e = curve_E();
    const auto f = FiniteField::gf4();
    const auto pts = rational_points(e);
    for (const auto& p : pts) {
        for (const auto& q : pts) {
            if (p.infinity || q.infinity || p.x == q.x) continue;
            const RatFunc l = (q.y + p.y) / (q.x + p.x);
            const RatFunc nu = (p.x * q.y + q.x * p.y) / (q.x + p.x);
            const RatFunc one = RatFunc::one(f);
            const CurvePoint formula = CurvePoint::affine(p.x + q.x + l * l + one, p.y + q.y + l * l * l + l + nu + one);
            CHECK(formula == add_points(e, p, q));
        }
    }
}

TEST_CASE("the ten sections form Z/10") {
    const auto c = curve_Ystar();
    const auto s = ystar_sections();
    for (int i = 0; i <= 4; ++i) {
        const auto si = "s" + std::to_string(i), mi = "m" + std::to_string(i);
        CHECK(mul_point(c, i, s.at("s1")) == s.at(si));
        CHECK(add_points(c, s.at("m0"), s.at(si)) == s.at(mi));
    }
    CHECK(add_points(c, s.at("m0"), s.at("m0")).infinity);
    CHECK(add_points(c, s.at("s1"), s.at("s1")) == s.at("s2"));
    CHECK(point_order(c, s.at("m1")) == 10);
    CHECK(point_order(c, s.at("s1")) == 5);
}

TEST_CASE("place analysis of Ystar") {
    const auto c = curve_Ystar();
    const auto reports = place_analysis(c);
    REQUIRE(reports.size() == 3);
    const auto& r1 = at(reports, "t + 1");
    CHECK(r1.v_delta == 10);
    CHECK(r1.reduction == Reduction::multiplicative);
    CHECK(r1.kodaira == KodairaType::In(10));
    CHECK(r1.v_j == -10);
    const auto& rw = at(reports, "t^2 + t + 1");
    CHECK(rw.v_delta == 2);
    CHECK(rw.geometric_count == 2);
    const auto& ri = at(reports, "t = inf");
    CHECK(ri.v_delta == 10);
    CHECK(ri.kodaira == KodairaType::In(10));

    // Total degree bookkeeping: 24 for a K3, 12 for a rational surface.
    int total = 0;
    for (const auto& r : reports) total += r.v_delta * int(r.geometric_count);
    CHECK(total == 24);
    int total_r = 0;
    for (const auto& r : place_analysis(curve_R())) total_r += r.v_delta * int(r.geometric_count);
    CHECK(total_r == 12);

    const auto split = place_analysis(c, {true});
    REQUIRE(split.size() == 4);
    for (const auto& r : split) CHECK(r.geometric_count == 1);

    const auto f4 = FiniteField::gf4();
    const Var t = var("t");
    const auto rw1 = fiber_at(c, Place::at(f4, t, f4.generator()));
    CHECK(rw1.v_delta == 2);
    CHECK(rw1.kodaira == KodairaType::In(2));
    const auto r0 = fiber_at(c, Place::at(FiniteField::gf2(), t, 0));
    CHECK(r0.reduction == Reduction::good);
    // The fiber at t = 0 is E.
    std::array<RatFunc, 5> a0;
    for (int i = 0; i < 5; ++i) a0[i] = c.coefficients()[i].substitute(t, R("0"));
    CHECK(WeierstrassCurve(f4, std::nullopt, a0) == curve_E());
}

TEST_CASE("infinity chart") {
    const auto chart = infinity_chart(curve_Ystar(), var("u"));
    CHECK(chart.weight == 2);
    CHECK(chart.curve.to_string() == "y^2 + x*y + u^6*y = x^3 + u^4*x^2 + u^10");
}

TEST_CASE("additive reduction and non-minimal models") {
    // y^2 + t y = x^3: a1 = 0, cusp at t = 0.
    const auto f = FiniteField::gf2();
    const WeierstrassCurve cusp(f, var("t"), {R("0"), R("0"), R("t"), R("0"), R("0")});
    const auto r = fiber_at(cusp, Place::at(f, var("t"), 0));
    CHECK(r.reduction == Reduction::additive);
    CHECK_FALSE(r.kodaira.has_value());
    const WeierstrassCurve big(f, var("t"), {R("t"), R("0"), R("t^3"), R("0"), R("t^6")});
    CHECK_THROWS_AS(place_analysis(big), NonMinimalModel);
}

TEST_CASE("Frobenius base change and the half-fiber j") {
    const auto bc = frobenius_base_change(curve_R(), var("s"), var("t"));
    CHECK(bc == curve_Ystar());
    const auto dr = invariants(curve_R()).delta.substitute(var("s"), R("t^2"));
    CHECK(dr == invariants(curve_Ystar()).delta);
    CHECK(invariants(curve_R()).j.substitute(var("s"), R("t^2")) == invariants(curve_Ystar()).j);

    const RatFunc a = R("a");
    const RatFunc h = half_fiber_j(a);
    CHECK(h == R("a^48/((a+1)^20*(a^2+a+1)^4)"));
    CHECK(h == invariants(curve_Ystar()).j.substitute(var("t"), a).squared());
    CHECK_FALSE(h.is_constant());
}

TEST_CASE("Shioda-Tate bookkeeping") {
    const auto y = shioda_tate_check(geometric_fibers(place_analysis(curve_Ystar(), {true})), 10, kPicardSupersingularK3);
    CHECK(y.mordell_weil_rank == 0);
    CHECK(y.discriminant_product == 400);
    CHECK(y.torsion_consistent);
    CHECK(y.artin_invariant == 1);
    const auto r = shioda_tate_check({KodairaType::In(5), KodairaType::In(5), KodairaType::In(1), KodairaType::In(1)}, 5,
                                     kPicardRational);
    CHECK(r.mordell_weil_rank == 0);
    CHECK(r.torsion_consistent);
    CHECK_FALSE(shioda_tate_check({KodairaType::In(5), KodairaType::In(5)}, 10, kPicardRational).torsion_consistent);
    CHECK(shioda_tate_check({}, 1, 2).mordell_weil_rank == 0);
    CHECK_THROWS_AS(shioda_tate_check({KodairaType::In(12)}, 1, kPicardRational), InconsistentData);
}

TEST_CASE("Kodaira labels") {
    CHECK(KodairaType::parse("I_{10}") == KodairaType::In(10));
    CHECK(KodairaType::parse("I1*").components() == 6);
    CHECK(KodairaType::parse("IV*").to_string() == "IV*");
    CHECK(KodairaType::parse("III").is_additive());
    CHECK_THROWS_AS(KodairaType::parse("V"), InvalidParameter);
}

}  // TEST_SUITE
