#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriques/algebra/ratfunc.hpp"
#include "enriques/algebra/univariate.hpp"
#include "enriques/weierstrass/kodaira.hpp"

namespace enriques::weierstrass {

using algebra::FiniteField;
using algebra::Place;
using algebra::Poly;
using algebra::RatFunc;
using algebra::Var;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(2^k) or over the
/// rational function field GF(2^k)(base).
class WeierstrassCurve {
public:
    /// Coefficients may only involve the base variable (none for a curve
    /// over the finite field). Throws InvalidParameter otherwise.
    WeierstrassCurve(const FiniteField& field, std::optional<Var> base, std::array<RatFunc, 5> a);

    const FiniteField& field() const noexcept { return field_; }
    const std::optional<Var>& base() const noexcept { return base_; }
    const RatFunc& a1() const noexcept { return a_[0]; }
    const RatFunc& a2() const noexcept { return a_[1]; }
    const RatFunc& a3() const noexcept { return a_[2]; }
    const RatFunc& a4() const noexcept { return a_[3]; }
    const RatFunc& a6() const noexcept { return a_[4]; }
    const std::array<RatFunc, 5>& coefficients() const noexcept { return a_; }

    /// LHS + RHS of the equation at (x, y); zero iff the point lies on the curve.
    RatFunc residual(const RatFunc& x, const RatFunc& y) const;

    /// Same curve over a larger field (GF(2) -> GF(2^k) only).
    WeierstrassCurve lifted(const FiniteField& f) const;

    /// "y^2 + t^2*x*y + y = x^3 + x^2 + t^2".
    std::string to_string() const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

private:
    FiniteField field_;
    std::optional<Var> base_;
    std::array<RatFunc, 5> a_;
};

struct Invariants {
    RatFunc b2, b4, b6, b8, c4, delta, j;
};

/// Characteristic-2 invariants. Throws SingularModel when delta = 0.
Invariants invariants(const WeierstrassCurve& curve);

/// Infinity or an affine point.
struct CurvePoint {
    bool infinity = true;
    RatFunc x, y;

    static CurvePoint zero() { return {}; }
    static CurvePoint affine(RatFunc x, RatFunc y) { return {false, std::move(x), std::move(y)}; }
    std::string to_string() const;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Throws FieldMismatch when the coordinates live over an unrelated field.
bool on_curve(const WeierstrassCurve& curve, const CurvePoint& p);
/// Throws PointNotOnCurve.
CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p);
/// Chord-tangent law. Throws PointNotOnCurve.
CurvePoint add_points(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);
/// n * P by double-and-add; negative n uses -P.
CurvePoint mul_point(const WeierstrassCurve& curve, long n, const CurvePoint& p);
/// Smallest n >= 1 with nP = 0, searching up to `bound`.
std::optional<long> point_order(const WeierstrassCurve& curve, const CurvePoint& p, long bound = 64);

/// All points over the (finite) coefficient field, infinity first, then
/// affine points in increasing (x, y) raw order.
std::vector<CurvePoint> rational_points(const WeierstrassCurve& curve);

enum class Reduction { good, multiplicative, additive };
std::string to_string(Reduction r);

struct FiberReport {
    Place place;
    int v_delta;
    /// Empty when j is identically 0.
    std::optional<int> v_j;
    Reduction reduction;
    /// I_n for multiplicative fibers; additive types are not computed.
    std::optional<KodairaType> kodaira;
    /// Number of geometric fibers the place stands for (its degree).
    unsigned geometric_count;
};

struct PlaceAnalysisOptions {
    /// Lift a GF(2) curve to the field that splits every bad place, so
    /// each report describes one geometric fiber.
    bool split = false;
};

/// Reports for every finite place with v(delta) > 0, then for infinity.
/// Throws SingularModel, NonMinimalModel.
std::vector<FiberReport> place_analysis(const WeierstrassCurve& curve, PlaceAnalysisOptions opts = {});

/// Report at one place (good places give Reduction::good).
FiberReport fiber_at(const WeierstrassCurve& curve, const Place& place);

/// The curve over u with t = 1/u and (x, y) rescaled by (u^-2m, u^-3m),
/// m minimal so that every coefficient is a polynomial in u.
struct InfinityChart {
    WeierstrassCurve curve;
    int weight;  // m
};
InfinityChart infinity_chart(const WeierstrassCurve& curve, Var u);

/// Substitutes s := t^2 in every coefficient.
WeierstrassCurve frobenius_base_change(const WeierstrassCurve& curve, Var s, Var t);

/// j(E_a)^2 where j(E_a) = a^24 / ((a+1)^10 (a^2+a+1)^2).
RatFunc half_fiber_j(const RatFunc& a);

struct ShiodaTateReport {
    int picard_number;
    int trivial_lattice_rank;  // 2 + sum (components - 1)
    int mordell_weil_rank;
    long discriminant_product;  // product of component-group orders
    long torsion_order;
    /// With MW rank 0: prod / |T|^2 must be 1 when rho = 10 (unimodular
    /// Neron-Severi lattice) and 2^(2 sigma), 1 <= sigma <= 10, when rho = 22
    /// (supersingular K3, sigma = Artin invariant). Otherwise only
    /// |T|^2 | prod is checked.
    bool torsion_consistent;
    std::optional<int> artin_invariant;
};

/// Throws InconsistentData when the trivial lattice exceeds the Picard number
/// or the torsion order squared does not divide the discriminant product.
ShiodaTateReport shioda_tate_check(const std::vector<KodairaType>& fibers, long torsion_order, int picard_number);

inline constexpr int kPicardRational = 10;
inline constexpr int kPicardSupersingularK3 = 22;

/// Multiplicative labels of the geometric fibers, expanded by degree.
std::vector<KodairaType> geometric_fibers(const std::vector<FiberReport>& reports);

// Built-in curves.
WeierstrassCurve curve_E();        // y^2 + y = x^3 + x^2 over GF(4)
WeierstrassCurve curve_R();        // y^2 + s xy + y = x^3 + x^2 + s
WeierstrassCurve curve_Ystar();    // y^2 + t^2 xy + y = x^3 + x^2 + t^2
WeierstrassCurve curve_kummerEF(); // y^2 + xy = x^3 + b x over GF(2)(b)
/// "E", "R", "Ystar", "kummerEF". Throws UnknownBuiltin.
WeierstrassCurve builtin_curve(const std::string& name);
std::vector<std::string> builtin_curve_names();

/// The ten sections s0..s4, m0..m4 of Ystar, keyed by name.
std::map<std::string, CurvePoint> ystar_sections();
/// P0..P4 on E over GF(4).
std::map<std::string, CurvePoint> e_points();

}  // namespace enriques::weierstrass
