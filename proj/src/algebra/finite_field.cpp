#include "enriques/algebra/finite_field.hpp"

#include <bit>

#include "enriques/errors.hpp"

namespace enriques::algebra {

namespace {

int degree_of(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t m) {
    const int dm = degree_of(m);
    for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
    return a;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) {
    const int d = degree_of(poly);
    if (d < 1) return false;
    for (std::uint32_t q = 2; degree_of(q) <= d / 2; ++q) {
        if (gf2_mod(poly, q) == 0) return false;
    }
    return true;
}

std::uint16_t FiniteField::canonical_modulus(int k) {
    switch (k) {
        case 1: return 0b11;         // w + 1
        case 2: return 0b111;        // w^2 + w + 1
        case 3: return 0b1011;       // w^3 + w + 1
        case 4: return 0b10011;      // w^4 + w + 1
        case 5: return 0b100101;     // w^5 + w^2 + 1
        case 6: return 0b1000011;    // w^6 + w + 1
        case 7: return 0b10000011;   // w^7 + w + 1
        case 8: return 0b100011101;  // w^8 + w^4 + w^3 + w^2 + 1
        default: break;
    }
    throw InvalidParameter("GF(2^k) supported for 1 <= k <= 8, got k = " + std::to_string(k));
}

FiniteField FiniteField::gf(int k) { return FiniteField(k, canonical_modulus(k)); }

FiniteField::FiniteField(int k, std::uint16_t modulus) : k_(k), modulus_(modulus) {
    if (k < 1 || k > kMaxDegree) {
        throw InvalidParameter("GF(2^k) supported for 1 <= k <= 8, got k = " + std::to_string(k));
    }
    if (degree_of(modulus) != k || !is_irreducible_gf2(modulus)) {
        throw NotIrreducible("modulus is not an irreducible polynomial of degree " +
                             std::to_string(k));
    }
}

Raw FiniteField::mul(Raw a, Raw b) const noexcept {
    std::uint32_t acc = 0;
    std::uint32_t aa = a;
    for (Raw bb = b; bb != 0; bb >>= 1, aa <<= 1) {
        if (bb & 1) acc ^= aa;
    }
    return static_cast<Raw>(gf2_mod(acc, modulus_));
}

Raw FiniteField::pow(Raw a, std::uint64_t e) const noexcept {
    Raw result = 1;
    Raw base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Raw FiniteField::inv(Raw a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(2^" + std::to_string(k_) + ")");
    return pow(a, size() - 2);
}

Raw FiniteField::sqrt(Raw a) const noexcept { return pow(a, size() / 2); }

std::vector<Raw> FiniteField::elements() const {
    std::vector<Raw> out(size());
    for (unsigned i = 0; i < size(); ++i) out[i] = static_cast<Raw>(i);
    return out;
}

std::string FiniteField::format(Raw a) const {
    if (a == 0) return "0";
    std::string out;
    for (int i = k_ - 1; i >= 0; --i) {
        if (!((a >> i) & 1)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) out += "1";
        else if (i == 1) out += "w";
        else out += "w^" + std::to_string(i);
    }
    return out;
}

FieldElement::FieldElement(FiniteField field, Raw value) : field_(field), value_(value) {
    if (!field_.contains(value)) throw InvalidParameter("raw value outside the field");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) {
        throw FieldMismatch("operands live in GF(2^" + std::to_string(a.field().degree()) +
                            ") and GF(2^" + std::to_string(b.field().degree()) + ")");
    }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(*this, o);
    return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(*this, o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(*this, o);
    return {field_, field_.mul(value_, field_.inv(o.value_))};
}

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::sqrt() const { return {field_, field_.sqrt(value_)}; }

}  // namespace enriques::algebra
