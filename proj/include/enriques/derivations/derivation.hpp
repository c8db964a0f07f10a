#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriques/algebra/ratfunc.hpp"

namespace enriques::derivations {

using algebra::FiniteField;
using algebra::Poly;
using algebra::RatFunc;
using algebra::Var;

/// The parameter pair (a, b) with a + b = ab. Symbolic: a stays a
/// variable over GF(2) and b = a/(a+1). Specialized: a is a field element
/// with a^3 != 1, or a = b = 0.
class ParamContext {
public:
    static ParamContext symbolic();
    /// Throws InvalidParameter when a^3 = 1 (a != 0).
    static ParamContext specialized(const FiniteField& f, algebra::Raw a);

    bool is_symbolic() const noexcept { return !value_.has_value(); }
    const FiniteField& field() const noexcept { return field_; }
    RatFunc a() const;
    RatFunc b() const;
    /// Replaces the variables a and b of f by their values in this context.
    RatFunc resolve(const RatFunc& f) const;
    std::string to_string() const;

private:
    ParamContext(FiniteField f, std::optional<algebra::Raw> v) : field_(f), value_(v) {}

    FiniteField field_;
    std::optional<algebra::Raw> value_;
};

/// f d/dt + g d/dx on the function field of the (t, x) plane.
class Derivation {
public:
    /// Coefficients may mention a and b; they are resolved in `ctx`.
    Derivation(const RatFunc& coeff_t, const RatFunc& coeff_x, ParamContext ctx = ParamContext::symbolic());

    const RatFunc& coeff_t() const noexcept { return coeff_t_; }
    const RatFunc& coeff_x() const noexcept { return coeff_x_; }
    const ParamContext& context() const noexcept { return ctx_; }

    /// D(f) = coeff_t df/dt + coeff_x df/dx, with a and b resolved.
    RatFunc apply(const RatFunc& f) const;
    /// c * D.
    Derivation scaled(const RatFunc& c) const;

private:
    RatFunc coeff_t_;
    RatFunc coeff_x_;
    ParamContext ctx_;
};

/// h with D^2 = h D, or nothing when D is not 2-closed.
std::optional<RatFunc> p_closure_multiplier(const Derivation& d);

enum class VectorFieldType { additive, multiplicative };
std::string to_string(VectorFieldType t);

/// Additive iff D^2 = 0. Throws NotPClosed.
VectorFieldType vector_field_type(const Derivation& d);

/// A fiber t = root along which D is tangent (coeff_t vanishes).
struct FiberLocus {
    RatFunc root;
    unsigned multiplicity;
};

struct IntegralFibers {
    /// Roots rational over the coefficient field, sorted by printed form.
    std::vector<FiberLocus> rational;
    /// Irreducible factors of degree >= 2 in t (points over extensions).
    std::vector<std::pair<Poly, unsigned>> other;
    /// coeff_t = 0: every fiber is integral.
    bool all = false;
};

/// Zeros of coeff_t as a function of t. Over GF(2)(a) roots are found by
/// the rational root test in GF(2)[a]; after specialization by factoring.
IntegralFibers integral_fiber_places(const Derivation& d);

enum class EulerVerdict { divisorial, isolated_zeros, inconsistent };
std::string to_string(EulerVerdict v);

struct EulerBookkeeping {
    long degree;  // deg <D>
    EulerVerdict verdict;
};

/// c2 = deg<D> - K.(D) - (D)^2, solved for deg<D>.
EulerBookkeeping euler_bookkeeping(long c2, long d_square, long k_dot_d);

/// Formal sum of named curve classes.
using DivisorCombination = std::map<std::string, long>;

/// The divisorial part of D on the K3 cover (twelve curves, coefficient -1).
DivisorCombination divisorial_part_D();
/// The divisorial part of D' as transcribed data.
DivisorCombination divisorial_part_Dprime();

/// (t + 1)(t + a)(t + b) d/dt + (1 + t^2 x) d/dx.
Derivation derivation_Dprime(const ParamContext& ctx = ParamContext::symbolic());
/// D' / (t + 1).
Derivation derivation_D(const ParamContext& ctx = ParamContext::symbolic());
/// "Dprime", "D". Throws UnknownBuiltin.
Derivation builtin_derivation(const std::string& name, const ParamContext& ctx = ParamContext::symbolic());

}  // namespace enriques::derivations
