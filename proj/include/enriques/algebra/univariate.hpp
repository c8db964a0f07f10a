#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enriques/algebra/ratfunc.hpp"

namespace enriques::algebra {

struct Factor {
    Poly factor;  // monic irreducible
    unsigned multiplicity;
};

/// Factors a univariate polynomial over its coefficient field. Factors
/// are monic, sorted by degree then by the polynomial order; the leading
/// coefficient of p is the omitted unit. A constant gives an empty list.
/// Throws ZeroPolynomial on 0 and InvalidParameter when p has more than
/// one variable.
///
/// Squarefree decomposition, then distinct-degree and equal-degree
/// splitting (trace map, since the characteristic is 2).
std::vector<Factor> factor_univariate(const Poly& p);

/// Same contract, exhaustive trial division by monic irreducibles of
/// degree up to deg/2. Slow; used to cross-check factor_univariate.
std::vector<Factor> factor_by_trial_division(const Poly& p);

/// True iff p is univariate of positive degree and irreducible.
bool is_irreducible(const Poly& p);

/// Roots of p in its coefficient field, ascending raw order.
std::vector<Raw> roots_in_field(const Poly& p);

/// A place of the rational function field K(x): a monic irreducible
/// polynomial in x, or the place at infinity of x.
class Place {
public:
    /// Throws NotIrreducible unless p is univariate, monic and irreducible.
    static Place finite(const Poly& p);
    /// x = c.
    static Place at(const FiniteField& f, Var x, Raw c);
    static Place infinity(Var x);

    bool is_infinity() const noexcept { return !poly_.has_value(); }
    Var variable() const noexcept { return var_; }
    /// Throws InvalidParameter at infinity.
    const Poly& poly() const;
    /// Degree of the residue field over the constants; 1 at infinity.
    unsigned degree() const noexcept;

    /// "t + 1", "t^2 + t + 1", "t = inf".
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) noexcept {
        return a.var_ == b.var_ && a.poly_ == b.poly_;
    }

private:
    Place(Var x, std::optional<Poly> p) : var_(x), poly_(std::move(p)) {}

    Var var_;
    std::optional<Poly> poly_;
};

/// Order of vanishing of f at the place. For finite places the place
/// polynomial may involve other variables only through the coefficient
/// ring (e.g. t + a); divisibility is tested exactly. At infinity the
/// value is deg den - deg num in the place variable. Throws ZeroFunction.
int valuation(const RatFunc& f, const Place& place);
int valuation(const Poly& f, const Place& place);

/// K[x]/(p) for a finite place p, a field with |K|^deg(p) elements.
/// Elements are represented by their reduced polynomial of degree < deg p.
class ResidueField {
public:
    /// Throws InvalidParameter for the place at infinity.
    explicit ResidueField(const Place& place);

    /// Remainder modulo the place polynomial; input must be univariate in
    /// the place variable.
    Poly reduce(const Poly& p) const;
    /// Throws DivisionByZero when the denominator vanishes at the place.
    Poly reduce(const RatFunc& f) const;

    Poly mul(const Poly& a, const Poly& b) const;
    /// Throws DivisionByZero on 0.
    Poly inverse(const Poly& a) const;
    /// The unique square root (Frobenius is bijective on a finite field).
    Poly sqrt(const Poly& a) const;
    /// Number of elements, as a power of two: log2 |K[x]/(p)|.
    unsigned bits() const noexcept { return bits_; }

private:
    Place place_;
    unsigned bits_;
};

/// The finite places where a univariate f has a zero or a pole.
std::vector<Place> finite_support(const RatFunc& f, Var x);

}  // namespace enriques::algebra
