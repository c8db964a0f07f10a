#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace enriques::algebra {

/// Raw element of GF(2^k): the coefficient bits of a polynomial in the
/// field generator w, bit i = coefficient of w^i.
using Raw = std::uint16_t;

/// True iff the GF(2) polynomial with coefficient bits `poly` is
/// irreducible. Exhaustive trial division; meant for degree <= 16.
bool is_irreducible_gf2(std::uint32_t poly);

/// GF(2^k) for 1 <= k <= 8, realised as GF(2)[w]/(modulus).
///
/// Arithmetic is table-free carry-less multiplication followed by
/// reduction. The canonical modulus for k = 2 is w^2 + w + 1, so that the
/// generator w is a primitive cube root of unity.
class FiniteField {
public:
    static constexpr int kMaxDegree = 8;

    /// GF(2).
    FiniteField() = default;

    /// GF(2^k) with the canonical modulus for k.
    static FiniteField gf(int k);
    static FiniteField gf2() { return FiniteField(); }
    static FiniteField gf4() { return gf(2); }

    /// GF(2^k) with an explicit modulus. Throws NotIrreducible.
    FiniteField(int k, std::uint16_t modulus);

    static std::uint16_t canonical_modulus(int k);

    int degree() const noexcept { return k_; }
    std::uint16_t modulus() const noexcept { return modulus_; }
    unsigned size() const noexcept { return 1u << k_; }
    bool is_prime() const noexcept { return k_ == 1; }
    bool contains(Raw r) const noexcept { return r < size(); }

    /// The class of w. In GF(2) this is 1.
    Raw generator() const noexcept { return k_ == 1 ? 1 : 2; }

    Raw add(Raw a, Raw b) const noexcept { return a ^ b; }
    Raw mul(Raw a, Raw b) const noexcept;
    /// Throws DivisionByZero on 0.
    Raw inv(Raw a) const;
    Raw pow(Raw a, std::uint64_t e) const noexcept;
    /// Unique square root (Frobenius is bijective).
    Raw sqrt(Raw a) const noexcept;

    /// All elements in increasing raw order.
    std::vector<Raw> elements() const;

    /// "0", "1", "w", "w^2 + 1", ...
    std::string format(Raw a) const;

    friend bool operator==(const FiniteField&, const FiniteField&) = default;

private:
    int k_ = 1;
    std::uint16_t modulus_ = 0b11;
};

/// An element together with the field it lives in. Mixed-field arithmetic
/// throws FieldMismatch.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FiniteField field, Raw value);

    static FieldElement zero(const FiniteField& f) { return {f, 0}; }
    static FieldElement one(const FiniteField& f) { return {f, 1}; }
    static FieldElement generator(const FiniteField& f) { return {f, f.generator()}; }

    const FiniteField& field() const noexcept { return field_; }
    Raw raw() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement sqrt() const;

    std::string to_string() const { return field_.format(value_); }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    FiniteField field_;
    Raw value_ = 0;
};

}  // namespace enriques::algebra
