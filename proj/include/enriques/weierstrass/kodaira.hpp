#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace enriques::weierstrass {

enum class KodairaFamily { I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

/// Kodaira fiber type. `n` is used by I_n and I_n* only; I_0 is a smooth fiber.
struct KodairaType {
    KodairaFamily family = KodairaFamily::I;
    int n = 0;

    static KodairaType In(int n) { return {KodairaFamily::I, n}; }
    static KodairaType InStar(int n) { return {KodairaFamily::IStar, n}; }

    /// Accepts "I8", "I_8", "I_{8}", "I1*", "I_1*", "II", "III", "IV",
    /// "II*", "III*", "IV*". Throws InvalidParameter.
    static KodairaType parse(std::string_view text);
    static std::optional<KodairaType> try_parse(std::string_view text);

    /// Compact form: "I8", "I1*", "IV*".
    std::string to_string() const;

    bool is_multiplicative() const noexcept { return family == KodairaFamily::I && n >= 1; }
    bool is_additive() const noexcept { return family != KodairaFamily::I; }
    bool is_reducible() const noexcept;

    /// Number of irreducible components.
    int components() const noexcept;
    /// Order of the component group of the Neron model (discriminant of
    /// the root lattice spanned by the non-identity components).
    int discriminant() const noexcept;
    /// Euler number for tame fibers.
    int euler_number() const noexcept;

    friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

}  // namespace enriques::weierstrass
