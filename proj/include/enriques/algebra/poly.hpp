#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enriques/algebra/finite_field.hpp"

namespace enriques::algebra {

/// Interned variable handle. Smaller index = higher priority in the
/// lexicographic monomial order and earlier in printed output.
using Var = std::uint8_t;

/// Interns `name` and returns its handle. The common names (t, s, x, y, z,
/// u, v, a, b, the remaining letters, x0..x5, u0, u1, v0, v1, ...) are
/// registered at start-up in a fixed order so printed output is stable.
Var var(std::string_view name);
const std::string& var_name(Var v);
std::optional<Var> find_var(std::string_view name);

/// Sparse exponent vector, sorted by variable index.
class Monomial {
public:
    static constexpr int kMaxVars = 10;

    Monomial() = default;
    static Monomial of(Var v, unsigned exponent = 1);

    int size() const noexcept { return size_; }
    Var var_at(int i) const noexcept { return vars_[i]; }
    unsigned exp_at(int i) const noexcept { return exps_[i]; }
    bool is_one() const noexcept { return size_ == 0; }

    unsigned degree(Var v) const noexcept;
    unsigned total_degree() const noexcept;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const noexcept;
    /// *this / divisor; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;
    Monomial without(Var v) const;
    Monomial gcd(const Monomial& o) const;

    /// Lexicographic order, variables compared by priority.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept;

    std::string to_string() const;

private:
    void push(Var v, unsigned e);

    std::array<Var, kMaxVars> vars_{};
    std::array<std::uint16_t, kMaxVars> exps_{};
    std::uint8_t size_ = 0;
};

struct Term {
    Monomial mono;
    Raw coeff;
};

/// Multivariate polynomial over GF(2^k), canonical sparse form: terms
/// strictly decreasing in the monomial order, no zero coefficients.
///
/// Binary operations accept operands over the same field, or one operand
/// over GF(2) (promoted through the canonical embedding). Anything else
/// throws FieldMismatch.
class Poly {
public:
    Poly() = default;
    explicit Poly(FiniteField field) : field_(field) {}

    static Poly constant(const FiniteField& f, Raw c);
    static Poly constant(const FieldElement& c) { return constant(c.field(), c.raw()); }
    static Poly one(const FiniteField& f) { return constant(f, 1); }
    static Poly variable(const FiniteField& f, Var v, unsigned exponent = 1);
    static Poly variable(const FiniteField& f, std::string_view name, unsigned exponent = 1) {
        return variable(f, var(name), exponent);
    }
    static Poly monomial(const FiniteField& f, Raw c, const Monomial& m);

    const FiniteField& field() const noexcept { return field_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    /// Constant coefficient (0 for the zero polynomial).
    Raw constant_term() const noexcept;
    const Term& leading_term() const;
    Raw leading_coeff() const { return leading_term().coeff; }

    unsigned degree(Var v) const noexcept;
    unsigned total_degree() const noexcept;
    /// Variables that occur, in priority order.
    std::vector<Var> variables() const;
    bool involves(Var v) const noexcept { return degree(v) > 0; }

    /// Same terms, reinterpreted over `target`. Only GF(2) -> GF(2^k) or
    /// identity; throws FieldMismatch otherwise.
    Poly lifted(const FiniteField& target) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const { return *this + o; }
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(Raw c) const;
    Poly pow(unsigned e) const;
    /// Frobenius: p(x)^2, computed termwise.
    Poly squared() const;

    /// Formal partial derivative (char 2: exponent parity decides).
    Poly derivative(Var v) const;

    /// p with v replaced by `value`.
    Poly substitute(Var v, const Poly& value) const;
    /// Simultaneous substitution.
    Poly substitute(std::span<const std::pair<Var, Poly>> values) const;
    /// Coefficients of powers of v, index = exponent.
    std::vector<Poly> coefficients_in(Var v) const;
    /// Builds sum_i coeffs[i] * v^i.
    static Poly from_coefficients(const FiniteField& f, Var v, std::span<const Poly> coeffs);

    /// Exact division, or nullopt when `divisor` does not divide *this.
    std::optional<Poly> try_divide(const Poly& divisor) const;
    /// Throws InconsistentData when not divisible, DivisionByZero on 0.
    Poly divide_exact(const Poly& divisor) const;

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    Poly monic() const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept;

private:
    static Poly from_unsorted(const FiniteField& f, std::vector<Term> terms);

    FiniteField field_;
    std::vector<Term> terms_;
};

/// Field the result of combining a and b lives in; throws FieldMismatch.
FiniteField common_field(const FiniteField& a, const FiniteField& b);

/// Monic greatest common divisor (recursive primitive PRS for the
/// multivariate case, Euclid for the univariate one). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Pseudo-remainder of a by b with respect to v.
Poly pseudo_remainder(const Poly& a, const Poly& b, Var v);

}  // namespace enriques::algebra
