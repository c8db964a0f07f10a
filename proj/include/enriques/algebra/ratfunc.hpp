#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "enriques/algebra/poly.hpp"

namespace enriques::algebra {

/// Quotient of two polynomials, kept reduced: gcd(num, den) = 1 and the
/// denominator's leading coefficient is 1. The zero function is 0/1.
/// With this normal form equality is syntactic.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one(FiniteField())) {}
    explicit RatFunc(const FiniteField& f) : num_(f), den_(Poly::one(f)) {}
    RatFunc(Poly p);  // NOLINT: polynomials are rational functions
    /// Throws DivisionByZero when den is zero.
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const FiniteField& f, Raw c) { return RatFunc(Poly::constant(f, c)); }
    static RatFunc one(const FiniteField& f) { return constant(f, 1); }
    static RatFunc variable(const FiniteField& f, std::string_view name, unsigned e = 1) {
        return RatFunc(Poly::variable(f, name, e));
    }

    const FiniteField& field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }
    std::vector<Var> variables() const;
    bool involves(Var v) const noexcept { return num_.involves(v) || den_.involves(v); }

    RatFunc lifted(const FiniteField& target) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const { return *this + o; }
    RatFunc operator*(const RatFunc& o) const;
    /// Throws DivisionByZero.
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    /// Negative exponents invert first.
    RatFunc pow(int e) const;
    RatFunc squared() const;

    /// Quotient rule. In characteristic 2 the sign is irrelevant:
    /// (n/d)' = (n'd + nd') / d^2.
    RatFunc derivative(Var v) const;

    RatFunc substitute(Var v, const RatFunc& value) const;
    /// Simultaneous substitution: every listed variable is replaced at once.
    RatFunc substitute(std::span<const std::pair<Var, RatFunc>> values) const;

    /// "num" when the denominator is 1, otherwise "num/den" with sums
    /// parenthesized: "a/(a + 1)".
    std::string to_string() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Reduced {};
    RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    static RatFunc make_reduced(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

/// Polynomial substitution of rational values, returning a reduced RatFunc.
RatFunc substitute(const Poly& p, std::span<const std::pair<Var, RatFunc>> values);

}  // namespace enriques::algebra
